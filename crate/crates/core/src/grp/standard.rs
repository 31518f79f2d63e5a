//! The fixed dictionary of groups, class representatives and subgroups.
//!
//! Class representatives: `g2 = (1 2)`, `g2' = (1 2)(3 4)`, `g3 = (1 2 3)`,
//! `g4 = (1 3 2 4)` (so `g4^2 = g2'`), `g5 = (1 2 3 4 5)`,
//! `g6 = (1 2 3)(4 5)`.

use std::sync::Arc;

use super::group::Group;
use super::perm::Perm;
use crate::error::{Error, Result};

/// Class labels of `S_n` in their fixed order.
pub const CLASS_LABELS: [&str; 7] = ["1", "g2", "g2'", "g3", "g4", "g5", "g6"];

fn rep_cycles(label: &str) -> Option<(usize, &'static str)> {
    // (minimal degree, cycle notation)
    Some(match label {
        "1" => (1, "()"),
        "g2" => (2, "(1 2)"),
        "g2'" => (4, "(1 2)(3 4)"),
        "g3" => (3, "(1 2 3)"),
        "g4" => (4, "(1 3 2 4)"),
        "g5" => (5, "(1 2 3 4 5)"),
        "g6" => (5, "(1 2 3)(4 5)"),
        _ => return None,
    })
}

/// The named class representatives of `S_n` that exist on `n` points.
pub fn standard_reps(n: usize) -> Vec<(String, Perm)> {
    CLASS_LABELS
        .iter()
        .filter_map(|&l| {
            let (min, cyc) = rep_cycles(l)?;
            (n >= min).then(|| (l.to_string(), Perm::parse(n, cyc).expect("valid literal")))
        })
        .collect()
}

/// `S_n` for `1 <= n <= 5`, named `"Sn"` with classes labelled
/// `1, g2, g2', g3, g4, g5, g6` as applicable.
pub fn symmetric_group(n: usize) -> Result<Arc<Group>> {
    if !(1..=5).contains(&n) {
        return Err(Error::Unsupported(format!(
            "S{n}: only 1 <= n <= 5 is supported"
        )));
    }
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Perm::parse(n, "(1 2)")?);
        let cyc: Vec<u8> = (1..=n as u8).collect();
        gens.push(Perm::from_cycles(n, &[&cyc])?);
    }
    Group::generated(&format!("S{n}"), n, &gens, &standard_reps(n))
}

/// The fixed representative of a labelled class of `gamma`.
pub fn standard_element(gamma: &Group, label: &str) -> Result<Perm> {
    let c = gamma.class_by_label(label)?;
    Ok(gamma.class_rep(c).clone())
}

fn parse_all(n: usize, gens: &[&str]) -> Result<Vec<Perm>> {
    gens.iter().map(|g| Perm::parse(n, g)).collect()
}

/// Generators of a dictionary subgroup and, for cyclic groups, the
/// distinguished generator.
fn dictionary(name: &str) -> Option<(&'static [&'static str], Option<&'static str>)> {
    Some(match name {
        "S1" | "C1" => (&[], None),
        "S2" => (&["(1 2)"], None),
        "S3" => (&["(1 2)", "(1 2 3)"], None),
        "S4" => (&["(1 2)", "(1 2 3 4)"], None),
        "S5" => (&["(1 2)", "(1 2 3 4 5)"], None),
        "S2xS2" => (&["(1 2)", "(3 4)"], None),
        "D8" => (&["(1 3 2 4)", "(1 2)"], None),
        "S3xS2" => (&["(1 2 3)", "(1 2)", "(4 5)"], None),
        "C2" => (&["(1 2)"], Some("(1 2)")),
        "C3" => (&["(1 2 3)"], Some("(1 2 3)")),
        "C4" => (&["(1 3 2 4)"], Some("(1 3 2 4)")),
        "C5" => (&["(1 2 3 4 5)"], Some("(1 2 3 4 5)")),
        "C6" => (&["(1 2 3)(4 5)"], Some("(1 2 3)(4 5)")),
        _ => return None,
    })
}

/// The dictionary subgroup `name` of `gamma`.
pub fn standard_subgroup(gamma: &Group, name: &str) -> Result<Arc<Group>> {
    let unknown = || Error::UnknownSubgroup {
        group: gamma.name().to_string(),
        name: name.to_string(),
    };
    let (gens, key) = dictionary(name).ok_or_else(unknown)?;
    let n = gamma.degree();
    let gens = parse_all(n, gens).map_err(|_| unknown())?;
    if !gens.iter().all(|g| gamma.contains(g)) {
        return Err(unknown());
    }
    let g = Group::generated(name, n, &gens, &[])?;
    Ok(match key {
        Some(k) => g.with_key(Perm::parse(n, k)?),
        None => g,
    })
}

/// Names of the quotient types that primitives are defined on.
pub const QUOTIENT_NAMES: [&str; 7] = ["S1", "S2", "S3", "S4", "S5", "S2xS2", "S3xS2"];

/// The concrete model of a quotient type: `S_n` on `n` points,
/// `S2xS2 = <(1 2),(3 4)>` on 4 points and `S3xS2 = <(1 2 3),(1 2),(4 5)>`
/// on 5 points with classes labelled `a;b` by their factors.
pub fn quotient_model(name: &str) -> Result<Arc<Group>> {
    match name {
        "S1" | "S2" | "S3" | "S4" | "S5" => symmetric_group(name[1..].parse().expect("digit")),
        "S2xS2" => Group::generated(name, 4, &parse_all(4, &["(1 2)", "(3 4)"])?, &[]),
        "S3xS2" => {
            let named: Vec<(String, Perm)> = [
                ("1;1", "()"),
                ("g2;1", "(1 2)"),
                ("g3;1", "(1 2 3)"),
                ("1;g2", "(4 5)"),
                ("g2;g2", "(1 2)(4 5)"),
                ("g3;g2", "(1 2 3)(4 5)"),
            ]
            .iter()
            .map(|(l, c)| Ok((l.to_string(), Perm::parse(5, c)?)))
            .collect::<Result<_>>()?;
            Group::generated(
                name,
                5,
                &parse_all(5, &["(1 2 3)", "(1 2)", "(4 5)"])?,
                &named,
            )
        }
        _ => Err(Error::Unsupported(format!(
            "no quotient model named {name}"
        ))),
    }
}
