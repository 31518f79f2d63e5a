//! The invariant suite behind `newbasis verify`.

use std::fmt;
use std::thread;

use newbasis::basis::{build_basis, resolve, xbar_pairs, Stage};
use newbasis::exact::CycNum;
use newbasis::mspace::{model_space, MVector};
use newbasis::symplectic::{
    fourier_vd, iota, iota_vector, is_bipositive, is_lagrangian, p_k, standard_model, to_mspace,
    F2Vector, VDFunction,
};

use crate::{Failure, BASIS_GROUPS};

pub struct Check {
    pub label: String,
    pub ok: bool,
    pub note: Option<String>,
}

impl Check {
    fn new(label: impl Into<String>, ok: bool) -> Self {
        Check {
            label: label.into(),
            ok,
            note: None,
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    fn error(label: impl Into<String>, e: newbasis::error::Error) -> Self {
        Check::new(label, false).with_note(e.to_string())
    }

    pub fn status(&self) -> &'static str {
        if self.ok {
            "OK"
        } else {
            "FAIL"
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.label, self.status())?;
        if let Some(n) = &self.note {
            write!(f, " ({n})")?;
        }
        Ok(())
    }
}

/// Runs the checks for `scope`: a group `S1`..`S5`, `V` for the symplectic
/// checks, or `all`. Groups are checked on separate threads.
pub fn run(scope: &str) -> Result<Vec<Check>, Failure> {
    let mut scopes: Vec<&str> = match scope {
        "all" => BASIS_GROUPS.to_vec(),
        "V" => vec![],
        g if BASIS_GROUPS.contains(&g) => vec![g],
        other => {
            return Err(Failure::Usage(format!(
                "cannot verify {other}; use S1..S5, V or all"
            )))
        }
    };
    let symplectic = matches!(scope, "all" | "V");
    let results: Vec<Vec<Check>> = thread::scope(|s| {
        let mut handles: Vec<_> = scopes
            .drain(..)
            .map(|g| s.spawn(move || group_checks(g)))
            .collect();
        if symplectic {
            handles.push(s.spawn(symplectic_checks));
        }
        handles
            .into_iter()
            .map(|h| h.join().expect("verification thread"))
            .collect()
    });
    Ok(results.into_iter().flatten().collect())
}

fn group_checks(g: &str) -> Vec<Check> {
    let mut out = Vec::new();
    let space = match model_space(g) {
        Ok(s) => s,
        Err(e) => return vec![Check::error(format!("space({g})"), e)],
    };
    let n = space.len();
    let m = space.pairing_matrix();
    let squared_is_identity = (0..n).all(|i| {
        (0..n).all(|j| {
            let s: CycNum = (0..n).map(|k| &m[i][k] * &m[k][j]).sum();
            s == CycNum::from_int(i64::from(i == j))
        })
    });
    out.push(Check::new(
        format!("involution({g}): A^2 = 1 on C[M({g})], dimension {n}"),
        squared_is_identity,
    ));
    let unit = space.fourier(&MVector::basis(&space, space.unit()));
    out.push(Check::new(
        format!("unit_transform({g}): closed form"),
        unit.is_ok_and(|u| u == space.fourier_of_unit()),
    ));

    let b = match build_basis(g) {
        Ok(b) => b,
        Err(e) => {
            out.push(Check::error(format!("basis({g})"), e));
            return out;
        }
    };
    out.push(Check::new(
        format!(
            "basis({g}): {}={n} elements, full rank, unique matching",
            b.len()
        ),
        b.len() == n,
    ));

    let bipositive = b
        .elements()
        .iter()
        .filter(|e| space.is_bipositive(&e.vector).unwrap_or(false))
        .count();
    out.push(Check::new(
        format!("bipositive({g}): {bipositive}/{}", b.len()),
        bipositive == b.len(),
    ));

    let unitriangular = b.elements().iter().all(|e| {
        e.vector.get(e.leading).is_one() && e.vector.support().iter().all(|&p| b.leq(p, e.leading))
    });
    out.push(Check::new(
        format!("unitriangular({g}): leading coefficient 1, support below"),
        unitriangular,
    ));

    let diagonal =
        b.elements().iter().enumerate().all(|(i, e)| {
            e.sign.abs() == 1 && b.fourier_matrix()[i][i] == CycNum::from_int(e.sign)
        });
    out.push(Check::new(format!("diagonal({g}): signs +-1"), diagonal));

    let violations = b.triangularity_violations();
    let tri = Check::new(
        format!("triangularity({g}): {} entries off order", violations.len()),
        violations.is_empty(),
    );
    out.push(match violations.first() {
        Some(&(i, k)) => {
            let label = |j: usize| space.pair_label(b.elements()[j].leading);
            tri.with_note(format!("first: A(h{}) involves h{}", label(i), label(k)))
        }
        None => tri,
    });

    let shriek_ok = (0..b.len()).all(|i| b.shriek(b.shriek(i)) == i);
    out.push(Check::new(format!("shriek({g}): involution"), shriek_ok));

    out.push(match b.tau() {
        Ok(t) => {
            let expected = match g {
                "S4" => Some(9),
                "S5" => Some(13),
                _ => None,
            };
            let c = Check::new(format!("tau({g})={t}"), expected.is_none_or(|x| x == t));
            match expected {
                Some(x) if x != t => c.with_note(format!("expected {x}")),
                _ => c,
            }
        }
        Err(e) => Check::error(format!("tau({g})"), e),
    });

    out.push(match b.lagrangian_census() {
        Ok(c) => Check::new(
            format!(
                "lagrangian_census: {}={}",
                c.lagrangian.len(),
                c.piece_one.len()
            ),
            c.lagrangian.len() == c.piece_one.len(),
        ),
        Err(e) => Check::error("lagrangian_census", e),
    });

    out.push(functoriality(g));
    out
}

fn functoriality(g: &str) -> Check {
    let label = format!("functoriality({g})");
    let run = || -> newbasis::error::Result<usize> {
        let space = model_space(g)?;
        let pairs = xbar_pairs(g)?;
        for pair in &pairs {
            let (h, hp) = resolve(space.group(), pair)?;
            let st = Stage::new(&space, &h, &hp)?;
            let q = st.quotient().clone();
            for &p in q.pairs() {
                let v = MVector::basis(&q, p);
                if space.fourier(&st.sigma_map(&v)?)? != st.sigma_map(&q.fourier(&v)?)? {
                    return Err(newbasis::error::Error::Verification(format!(
                        "{pair} at {}",
                        q.pair_label(p)
                    )));
                }
            }
        }
        Ok(pairs.len())
    };
    match run() {
        Ok(k) => Check::new(format!("{label}: A commutes with all {k} maps"), true),
        Err(e) => Check::error(label, e),
    }
}

fn symplectic_checks() -> Vec<Check> {
    let mut out = Vec::new();
    let dims = [2usize, 4, 6, 8];
    let delta = |d: usize, x: u32| VDFunction::indicator(d, [x]).expect("valid point");
    let involution = dims
        .iter()
        .all(|&d| (0..1u32 << d).all(|x| fourier_vd(&fourier_vd(&delta(d, x))) == delta(d, x)));
    out.push(Check::new(
        "symplectic: transform is an involution for D <= 8",
        involution,
    ));

    let prims = dims.iter().all(|&d| {
        (0..=d / 2).all(|k| {
            let p = p_k(d, k).expect("valid k");
            is_bipositive(&p).unwrap_or(false) && (k < d / 2 || is_lagrangian(&p))
        })
    });
    out.push(Check::new(
        "symplectic: P^k bipositive, P^(D/2) Lagrangian for D <= 8",
        prims,
    ));

    let rotation = dims.iter().all(|&d| {
        let basis: Vec<F2Vector> = (1..=d)
            .map(|i| F2Vector::e(d, i).expect("basis vector"))
            .collect();
        let mut images = basis.clone();
        (1..=d + 1).all(|step| {
            images = images.iter().map(iota_vector).collect();
            (images == basis) == (step == d + 1)
        })
    });
    out.push(Check::new(
        "symplectic: rotation has order D+1 for D <= 8",
        rotation,
    ));

    let commute = dims.iter().all(|&d| {
        (0..1u32 << d).all(|x| fourier_vd(&iota(&delta(d, x))) == iota(&fourier_vd(&delta(d, x))))
    });
    out.push(Check::new(
        "symplectic: rotation commutes with the transform for D <= 8",
        commute,
    ));

    let intertwine = [2usize, 4].iter().all(|&d| {
        let Ok((name, gens)) = standard_model(d) else {
            return false;
        };
        let Ok(m) = model_space(name) else {
            return false;
        };
        (0..1u32 << d).all(|x| {
            let f = delta(d, x);
            let lhs = to_mspace(&fourier_vd(&f), &m, &gens);
            let rhs = to_mspace(&f, &m, &gens).and_then(|v| m.fourier(&v));
            matches!((lhs, rhs), (Ok(a), Ok(b)) if a == b)
        })
    });
    out.push(Check::new(
        "symplectic: identification intertwines the transforms for D = 2, 4",
        intertwine,
    ));
    out
}
