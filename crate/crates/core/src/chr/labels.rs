//! Names of irreducible characters.
//!
//! Symmetric groups use exterior powers `lambda^k` of the reflection
//! character (`r` and `eps` on three points, `eps` on two), `sigma` for the
//! 2-dimensional character of `S4` and `nu`/`nu'` for the two 5-dimensional
//! characters of `S5` with `nu(g2) = 1`. Centralizers are named by values on
//! fixed elements, see the individual schemes below.

use std::sync::Arc;

use num_rational::BigRational;

use super::class_fn::ClassFunction;
use super::table::character_table;
use crate::error::{Error, Result};
use crate::exact::{CycNum, CONDUCTOR};
use crate::grp::{Group, Perm};

/// Spelling of `zeta_60^m` for the roots of unity that occur as labels.
pub fn root_label(m: i64) -> String {
    match m.rem_euclid(CONDUCTOR) {
        0 => "1".into(),
        30 => "-1".into(),
        20 => "theta".into(),
        40 => "theta^2".into(),
        50 => "-theta".into(),
        10 => "-theta^2".into(),
        15 => "i".into(),
        45 => "-i".into(),
        12 => "zeta".into(),
        24 => "zeta^2".into(),
        36 => "zeta^3".into(),
        48 => "zeta^4".into(),
        m => format!("z^{m}"),
    }
}

/// The exponent `m` with `v = zeta_60^m`, if `v` is a root of unity.
pub fn root_exponent(v: &CycNum) -> Option<i64> {
    (0..CONDUCTOR).find(|&m| CycNum::zeta60(m) == *v)
}

fn at(chi: &ClassFunction, cycles: &str) -> Result<CycNum> {
    let p = Perm::parse(chi.group().degree(), cycles)?;
    chi.value_at(&p).cloned()
}

fn sign_of(v: &CycNum, g: &Group) -> Result<bool> {
    if v.is_one() {
        Ok(true)
    } else if *v == CycNum::from_int(-1) {
        Ok(false)
    } else {
        Err(Error::Labelling(
            g.name().into(),
            format!("expected a sign, got {v}"),
        ))
    }
}

fn dim(chi: &ClassFunction) -> i64 {
    i64::try_from(&chi.degree().to_integer().expect("integral degree")).expect("small")
}

/// `lambda^0, .., lambda^(n-1)` of the reflection character of `S_n`
/// acting on the first `n` points, by Newton's identities.
pub fn exterior_powers(g: &Arc<Group>, n: usize) -> Vec<ClassFunction> {
    let refl = |p: &Perm| (0..n).filter(|&i| p.image(i) == i).count() as i64 - 1;
    let mut powers: Vec<ClassFunction> = vec![ClassFunction::trivial(g)];
    for k in 1..n {
        let values = (0..g.num_classes())
            .map(|c| {
                let x = g.class_rep(c);
                let mut acc = CycNum::zero();
                for i in 1..=k {
                    let term = powers[k - i].value(c).scale_int(refl(&x.pow(i)));
                    if i % 2 == 1 {
                        acc += &term;
                    } else {
                        acc -= &term;
                    }
                }
                acc.scale(&BigRational::new(1.into(), (k as i64).into()))
            })
            .collect();
        powers.push(ClassFunction::new(g.clone(), values));
    }
    powers
}

enum Scheme {
    Symmetric(usize),
    Sign,
    Klein,
    Dihedral,
    S5g2,
    S5g3,
    Product(String),
    Cyclic(Perm),
    Generic,
}

fn scheme_for(g: &Group) -> Scheme {
    let name = g.name();
    match name {
        "S1" | "S2" | "S3" | "S4" | "S5" => Scheme::Symmetric(name[1..].parse().expect("digit")),
        "Z(S2,g2)" | "Z(S3,g2)" => Scheme::Sign,
        "S2xS2" | "Z(S4,g2)" => Scheme::Klein,
        "D8" | "Z(S4,g2')" | "Z(S5,g2')" => Scheme::Dihedral,
        "Z(S5,g2)" => Scheme::S5g2,
        "Z(S5,g3)" => Scheme::S5g3,
        "S3xS2" => Scheme::Product("1".into()),
        _ => {
            if let Some(rest) = name.strip_prefix("Z(S3xS2,") {
                let class = rest.trim_end_matches(')');
                if let Some((first, _)) = class.split_once(';') {
                    if ["1", "g2", "g3"].contains(&first) {
                        return Scheme::Product(first.to_string());
                    }
                }
            }
            match g.key() {
                Some(k)
                    if g.is_abelian()
                        && g.contains(k)
                        && g.element_order(g.index_of(k).unwrap()) == g.order() =>
                {
                    Scheme::Cyclic(k.clone())
                }
                _ if g.order() == 2 => Scheme::Sign,
                _ => Scheme::Generic,
            }
        }
    }
}

fn symmetric_names(n: usize) -> Vec<&'static str> {
    match n {
        1 => vec!["1"],
        2 => vec!["1", "eps"],
        3 => vec!["1", "r", "eps"],
        4 => vec!["1", "lambda^1", "lambda^2", "lambda^3"],
        _ => vec!["1", "lambda^1", "lambda^2", "lambda^3", "lambda^4"],
    }
}

fn preferred_order(scheme: &Scheme) -> Option<Vec<String>> {
    let v: Vec<&str> = match scheme {
        Scheme::Symmetric(1) => vec!["1"],
        Scheme::Symmetric(2) => vec!["1", "eps"],
        Scheme::Symmetric(3) => vec!["1", "r", "eps"],
        Scheme::Symmetric(4) => vec!["1", "lambda^1", "sigma", "lambda^2", "lambda^3"],
        Scheme::Symmetric(_) => vec![
            "1", "lambda^1", "nu", "lambda^2", "nu'", "lambda^3", "lambda^4",
        ],
        Scheme::Sign => vec!["1", "eps"],
        Scheme::Klein => vec!["1", "eps", "eps'", "eps''"],
        Scheme::Dihedral => vec!["1", "eps", "eps'", "eps''", "r"],
        Scheme::S5g2 => vec!["1", "r", "eps", "-1", "-r", "-eps"],
        Scheme::S5g3 => vec!["1", "theta", "theta^2", "eps", "eps*theta", "eps*theta^2"],
        _ => return None,
    };
    Some(v.into_iter().map(String::from).collect())
}

/// Assigns a label to every irreducible and returns `(label, index)` pairs
/// in the scheme's canonical order.
pub(crate) fn assign_labels(g: &Arc<Group>, irr: &[ClassFunction]) -> Result<Vec<(String, usize)>> {
    let scheme = scheme_for(g);
    let bad = |msg: String| Error::Labelling(g.name().to_string(), msg);
    let mut labelled: Vec<(String, usize)> = Vec::with_capacity(irr.len());
    let mut sort_keys: Vec<(usize, usize)> = Vec::with_capacity(irr.len());
    match &scheme {
        Scheme::Symmetric(n) => {
            let powers = exterior_powers(g, *n);
            let names = symmetric_names(*n);
            for (i, chi) in irr.iter().enumerate() {
                let label = if let Some(k) = powers.iter().position(|p| p.values() == chi.values())
                {
                    names[k].to_string()
                } else if *n == 4 && dim(chi) == 2 {
                    "sigma".into()
                } else if *n == 5 && dim(chi) == 5 {
                    if sign_of(&at(chi, "(1 2)")?, g)? {
                        "nu".into()
                    } else {
                        "nu'".into()
                    }
                } else {
                    return Err(bad(format!(
                        "unexpected irreducible of degree {}",
                        dim(chi)
                    )));
                };
                labelled.push((label, i));
            }
        }
        Scheme::Sign => {
            let x = g.element(g.order() - 1).to_string();
            for (i, chi) in irr.iter().enumerate() {
                let label = if sign_of(&at(chi, &x)?, g)? {
                    "1"
                } else {
                    "eps"
                };
                labelled.push((label.into(), i));
            }
        }
        Scheme::Klein => {
            for (i, chi) in irr.iter().enumerate() {
                let a = sign_of(&at(chi, "(1 2)")?, g)?;
                let b = sign_of(&at(chi, "(3 4)")?, g)?;
                let label = match (a, b) {
                    (true, true) => "1",
                    (false, false) => "eps",
                    (false, true) => "eps'",
                    (true, false) => "eps''",
                };
                labelled.push((label.into(), i));
            }
        }
        Scheme::Dihedral => {
            for (i, chi) in irr.iter().enumerate() {
                let label = if dim(chi) == 2 {
                    "r"
                } else {
                    let rot = sign_of(&at(chi, "(1 3 2 4)")?, g)?;
                    let refl = sign_of(&at(chi, "(1 2)")?, g)?;
                    match (rot, refl) {
                        (true, true) => "1",
                        (true, false) => "eps",
                        (false, false) => "eps'",
                        (false, true) => "eps''",
                    }
                };
                labelled.push((label.into(), i));
            }
        }
        Scheme::S5g2 => {
            for (i, chi) in irr.iter().enumerate() {
                let plus = sign_of(
                    &at(chi, "(1 2)")?.scale(&BigRational::new(1.into(), dim(chi).into())),
                    g,
                )?;
                let tau = if dim(chi) == 2 {
                    "r"
                } else if sign_of(&at(chi, "(3 4)")?, g)? {
                    "1"
                } else {
                    "eps"
                };
                let label = if plus {
                    tau.to_string()
                } else {
                    format!("-{tau}")
                };
                labelled.push((label, i));
            }
        }
        Scheme::S5g3 => {
            for (i, chi) in irr.iter().enumerate() {
                let v = at(chi, "(1 2 3)")?;
                let m =
                    root_exponent(&v).ok_or_else(|| bad(format!("{v} is not a root of unity")))?;
                let theta = root_label(m);
                let plus = sign_of(&at(chi, "(4 5)")?, g)?;
                let label = match (plus, theta.as_str()) {
                    (true, _) => theta,
                    (false, "1") => "eps".into(),
                    (false, t) => format!("eps*{t}"),
                };
                labelled.push((label, i));
            }
        }
        Scheme::Cyclic(key) => {
            for (i, chi) in irr.iter().enumerate() {
                let v = chi.value_at(key)?;
                let m =
                    root_exponent(v).ok_or_else(|| bad(format!("{v} is not a root of unity")))?;
                labelled.push((root_label(m), i));
                sort_keys.push((m as usize, 0));
            }
        }
        Scheme::Product(first) => {
            let fix = |pts: &[usize]| -> Vec<Perm> {
                g.elements()
                    .iter()
                    .filter(|p| pts.iter().all(|&i| p.image(i) == i))
                    .cloned()
                    .collect()
            };
            let (name1, key1) = match first.as_str() {
                "1" => ("S3".to_string(), None),
                "g3" => (
                    "Z(S3,g3)".to_string(),
                    Some(Perm::parse(g.degree(), "(1 2 3)")?),
                ),
                other => (format!("Z(S3,{other})"), None),
            };
            let mut f1 = Group::from_elements(&name1, g.degree(), fix(&[3, 4]), &[])?;
            if let Some(k) = key1 {
                f1 = f1.with_key(k);
            }
            let f2 = Group::from_elements("Z(S2,g2)", g.degree(), fix(&[0, 1, 2]), &[])?;
            let t1 = character_table(&f1)?;
            let t2 = character_table(&f2)?;
            for (i, chi) in irr.iter().enumerate() {
                let r1 = chi.restrict(&f1)?;
                let r2 = chi.restrict(&f2)?.scale(&CycNum::frac(1, dim(chi)));
                let a = t1
                    .irreducibles()
                    .iter()
                    .position(|x| x.values() == r1.values());
                let b = t2
                    .irreducibles()
                    .iter()
                    .position(|x| x.values() == r2.values());
                let (Some(a), Some(b)) = (a, b) else {
                    return Err(bad("character is not a product of factor characters".into()));
                };
                labelled.push((format!("{};{}", t1.label(a), t2.label(b)), i));
                sort_keys.push((a, b));
            }
        }
        Scheme::Generic => {
            for i in 0..irr.len() {
                labelled.push((format!("chi{}", i + 1), i));
            }
        }
    }
    let mut names: Vec<&String> = labelled.iter().map(|(l, _)| l).collect();
    names.sort();
    names.dedup();
    if names.len() != labelled.len() {
        return Err(bad("labels are not distinct".into()));
    }
    if let Some(order) = preferred_order(&scheme) {
        let mut out = Vec::with_capacity(labelled.len());
        for name in &order {
            let found = labelled
                .iter()
                .find(|(l, _)| l == name)
                .ok_or_else(|| bad(format!("missing {name}")))?;
            out.push(found.clone());
        }
        if out.len() != labelled.len() {
            return Err(bad("unexpected extra irreducibles".into()));
        }
        return Ok(out);
    }
    if !sort_keys.is_empty() {
        let mut idx: Vec<usize> = (0..labelled.len()).collect();
        idx.sort_by_key(|&i| sort_keys[i]);
        return Ok(idx.into_iter().map(|i| labelled[i].clone()).collect());
    }
    Ok(labelled)
}
