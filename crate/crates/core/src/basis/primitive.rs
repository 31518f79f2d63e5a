use std::fmt;
use std::sync::Arc;

use crate::chr::root_label;
use crate::error::{Error, Result};
use crate::exact::{CycNum, CONDUCTOR};
use crate::mspace::{MSpace, MVector};

/// Name of a primitive element: `P_xi` for a root of unity `xi = zeta60^m`
/// (so `P_1` is `Root(0)`), or `P^k` for the Klein four-group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tag {
    Root(i64),
    Power(u32),
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tag::Root(m) => write!(f, "P_{}", root_label(*m)),
            Tag::Power(k) => write!(f, "P^{k}"),
        }
    }
}

impl Tag {
    /// Order of the root of unity, or `k` for `P^k`.
    fn order(self) -> i64 {
        match self {
            Tag::Root(m) => CONDUCTOR / num_integer::gcd(m.rem_euclid(CONDUCTOR), CONDUCTOR),
            Tag::Power(k) => i64::from(k),
        }
    }
}

const THETA: i64 = 20;
const I: i64 = 15;
const ZETA: i64 = 12;

fn root(m: i64) -> Tag {
    Tag::Root(m.rem_euclid(CONDUCTOR))
}

/// The primitive elements of a quotient type, in increasing total order.
pub fn tags(quotient: &str) -> Result<Vec<Tag>> {
    Ok(match quotient {
        "S1" => vec![root(0)],
        "S2" => vec![root(0), root(30)],
        "S3" => vec![root(0), root(THETA), root(2 * THETA)],
        "S4" => vec![root(0), root(I), root(-I)],
        "S5" => (0..5).map(|k| root(k * ZETA)).collect(),
        "S2xS2" => (0..3).map(Tag::Power).collect(),
        "S3xS2" => vec![
            root(0),
            root(30),
            root(THETA),
            root(2 * THETA),
            root(THETA + 30),
            root(2 * THETA + 30),
        ],
        other => {
            return Err(Error::Unsupported(format!(
                "no primitive elements for {other}"
            )))
        }
    })
}

/// The involution `!` on primitive elements.
///
/// For the symmetric groups and the Klein group it reverses the total
/// order. For `S3xS2` it swaps `P_1` with `P_-theta^2` and `P_-1` with
/// `P_theta^2` and fixes `P_theta`, `P_-theta`.
pub fn shriek_tag(quotient: &str, tag: Tag) -> Result<Tag> {
    let all = tags(quotient)?;
    let pos = all
        .iter()
        .position(|&t| t == tag)
        .ok_or_else(|| Error::Unsupported(format!("{tag} is not primitive for {quotient}")))?;
    if quotient == "S3xS2" {
        let image = match tag {
            Tag::Root(0) => root(2 * THETA + 30),
            Tag::Root(30) => root(2 * THETA),
            t if t == root(2 * THETA) => root(30),
            t if t == root(2 * THETA + 30) => root(0),
            t => t,
        };
        return Ok(image);
    }
    Ok(all[all.len() - 1 - pos])
}

/// Label of the piece containing the basis elements coming from `tag`.
pub fn piece_of(tag: Tag) -> String {
    match (tag, tag.order()) {
        (Tag::Power(0), _) | (Tag::Root(_), 1) => "1".into(),
        (Tag::Power(1), _) => "g2".into(),
        (Tag::Power(_), _) => "g2'".into(),
        (Tag::Root(_), d) => format!("g{d}"),
    }
}

/// The depth `delta` of a primitive element.
pub fn delta_of(quotient: &str, tag: Tag) -> Result<u32> {
    if shriek_tag(quotient, root(0)).ok() == Some(tag) {
        return Ok(0);
    }
    let d = match (quotient, tag) {
        ("S2xS2", Tag::Power(k)) => 2 - k,
        ("S2", Tag::Root(0)) => 1,
        ("S3", Tag::Root(0)) => 2,
        ("S3", Tag::Root(THETA)) => 3,
        ("S4", Tag::Root(0)) => 4,
        ("S4", Tag::Root(I)) => 5,
        ("S3xS2", Tag::Root(m)) => match m {
            0 => 4,
            30 => 3,
            THETA => 3,
            40 => 1,
            50 => 2,
            _ => {
                return Err(Error::Unsupported(format!(
                    "no depth for {tag} of {quotient}"
                )))
            }
        },
        ("S5", Tag::Root(m)) => match m {
            0 => 6,
            36 => 7,
            24 => 8,
            ZETA => 9,
            _ => {
                return Err(Error::Unsupported(format!(
                    "no depth for {tag} of {quotient}"
                )))
            }
        },
        _ => {
            return Err(Error::Unsupported(format!(
                "no depth for {tag} of {quotient}"
            )))
        }
    };
    Ok(d)
}

fn int(n: i64) -> CycNum {
    CycNum::from_int(n)
}

/// `sum_xi (g_n, xi)` over the listed labels, plus `h`.
fn with_block(
    m: &Arc<MSpace>,
    class: &str,
    block: &[(&str, CycNum)],
    h: &MVector,
) -> Result<MVector> {
    let mut v = h.clone();
    for (s, c) in block {
        v.add_at(m.find(class, s)?, c);
    }
    Ok(v)
}

fn h_part(m: &Arc<MSpace>, quotient: &str) -> Result<MVector> {
    let terms: Vec<(&str, &str, CycNum)> = match quotient {
        "S3" => vec![("1", "1", int(1)), ("1", "eps", int(1))],
        "S4" => vec![
            ("g2'", "eps'", int(1)),
            ("g2'", "eps''", int(1)),
            ("1", "lambda^2", int(1)),
            ("1", "sigma", int(1)),
            ("1", "1", int(1)),
        ],
        "S5" => vec![
            ("1", "1", int(1)),
            ("1", "nu", int(1)),
            ("1", "lambda^2", int(2)),
            ("1", "nu'", int(1)),
            ("1", "lambda^4", int(1)),
        ],
        _ => vec![],
    };
    MVector::from_terms(m, &terms)
}

/// The vector of a primitive element in the space of its quotient model.
pub fn primitive_vector(m: &Arc<MSpace>, tag: Tag) -> Result<MVector> {
    let quotient = m.group().name().to_string();
    let unit = MVector::basis(m, m.unit());
    if tag == root(0) || tag == Tag::Power(0) {
        return Ok(unit);
    }
    let bad = || Error::Unsupported(format!("{tag} is not primitive for {quotient}"));
    match quotient.as_str() {
        "S2" if tag == root(30) => with_block(m, "g2", &[("eps", int(1))], &unit),
        "S3" => {
            let h = h_part(m, "S3")?;
            match tag {
                Tag::Root(THETA) => with_block(m, "g3", &[("theta", int(1))], &h),
                Tag::Root(40) => with_block(m, "g3", &[("theta", int(1)), ("theta^2", int(1))], &h),
                _ => Err(bad()),
            }
        }
        "S4" => {
            let h = h_part(m, "S4")?;
            match tag {
                Tag::Root(I) => with_block(m, "g4", &[("i", int(1))], &h),
                Tag::Root(45) => with_block(m, "g4", &[("i", int(1)), ("-i", int(1))], &h),
                _ => Err(bad()),
            }
        }
        "S5" => {
            let h = h_part(m, "S5")?;
            let z = |k: i64| CycNum::zeta60(ZETA * k);
            match tag {
                Tag::Root(ZETA) => with_block(m, "g5", &[("zeta", int(1))], &h),
                Tag::Root(24) => {
                    with_block(m, "g5", &[("zeta", -(z(2) + z(3))), ("zeta^2", int(1))], &h)
                }
                Tag::Root(36) => with_block(m, "g5", &[("zeta^2", int(1)), ("zeta^3", int(1))], &h),
                Tag::Root(48) => with_block(
                    m,
                    "g5",
                    &[
                        ("zeta", int(1)),
                        ("zeta^2", int(1)),
                        ("zeta^3", int(1)),
                        ("zeta^4", int(1)),
                    ],
                    &h,
                ),
                _ => Err(bad()),
            }
        }
        "S2xS2" => {
            // e1 -> (1 2)(3 4), e3 -> (3 4); the characters of e2, e4 are
            // eps'' and eps
            let terms: &[(&str, &str)] = match tag {
                Tag::Power(1) => &[("()", "1"), ("(1 2)", "eps'")],
                Tag::Power(2) => &[
                    ("()", "1"),
                    ("(1 2)", "eps'"),
                    ("(3 4)", "eps''"),
                    ("(1 2)(3 4)", "eps"),
                ],
                _ => return Err(bad()),
            };
            let terms: Vec<(&str, &str, CycNum)> =
                terms.iter().map(|&(x, s)| (x, s, int(1))).collect();
            MVector::from_terms(m, &terms)
        }
        "S3xS2" => {
            let (m3, m2) = (
                crate::mspace::model_space("S3")?,
                crate::mspace::model_space("S2")?,
            );
            let (t3, t2) = match tag {
                Tag::Root(m) => {
                    let t2 = if m % THETA == 0 { root(0) } else { root(30) };
                    (root(m - if t2 == root(0) { 0 } else { 30 }), t2)
                }
                Tag::Power(_) => return Err(bad()),
            };
            let a = primitive_vector(&m3, t3)?;
            let b = primitive_vector(&m2, t2)?;
            tensor(m, &a, &b)
        }
        _ => Err(bad()),
    }
}

/// `a (x) b` in the space of `S3xS2`, pairing `(x,s) (x) (y,t)` with
/// `(x;y, s;t)`.
pub fn tensor(m: &Arc<MSpace>, a: &MVector, b: &MVector) -> Result<MVector> {
    let mut v = MVector::zero(m);
    for p in a.support() {
        for q in b.support() {
            let (x, s) = a.space().labels(p);
            let (y, t) = b.space().labels(q);
            let pair = m.find(&format!("{x};{y}"), &format!("{s};{t}"))?;
            v.add_at(pair, &(a.get(p) * b.get(q)));
        }
    }
    Ok(v)
}

/// All primitive elements of a quotient model with their tags.
pub fn primitives(m: &Arc<MSpace>) -> Result<Vec<(Tag, MVector)>> {
    tags(m.group().name())?
        .into_iter()
        .map(|t| Ok((t, primitive_vector(m, t)?)))
        .collect()
}
