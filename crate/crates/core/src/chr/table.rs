use std::sync::Arc;

use num_traits::Signed;
use serde::Serialize;

use super::class_fn::ClassFunction;
use super::dixon::irreducible_characters;
use super::labels::assign_labels;
use crate::error::{Error, Result};
use crate::exact::CycNum;
use crate::grp::Group;

/// The irreducible characters of a group with their labels, in the order
/// fixed by the labelling scheme.
#[derive(Debug)]
pub struct CharTable {
    group: Arc<Group>,
    irr: Vec<ClassFunction>,
    labels: Vec<String>,
}

/// Computes and verifies the character table of `g`.
pub fn character_table(g: &Arc<Group>) -> Result<Arc<CharTable>> {
    let mut raw: Vec<ClassFunction> = irreducible_characters(g)?
        .into_iter()
        .map(|v| ClassFunction::new(g.clone(), v))
        .collect();
    raw.sort_by_cached_key(|chi| {
        let deg = chi.degree().to_integer().expect("integral degree");
        let nontrivial = !chi.values().iter().all(CycNum::is_one);
        let key: Vec<Vec<String>> = chi.values().iter().map(CycNum::to_strings).collect();
        (deg, nontrivial, key)
    });
    let order = assign_labels(g, &raw)?;
    let mut irr = Vec::with_capacity(order.len());
    let mut labels = Vec::with_capacity(order.len());
    for (label, idx) in order {
        irr.push(raw[idx].clone());
        labels.push(label);
    }
    let table = CharTable {
        group: g.clone(),
        irr,
        labels,
    };
    table.verify()?;
    Ok(Arc::new(table))
}

impl CharTable {
    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.irr.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irr.is_empty()
    }

    pub fn irreducibles(&self) -> &[ClassFunction] {
        &self.irr
    }

    pub fn irr(&self, i: usize) -> &ClassFunction {
        &self.irr[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels.iter().position(|l| l == label).ok_or_else(|| {
            Error::Labelling(
                self.group.name().to_string(),
                format!("no irreducible labelled {label}"),
            )
        })
    }

    pub fn by_label(&self, label: &str) -> Result<&ClassFunction> {
        Ok(&self.irr[self.index_of(label)?])
    }

    pub fn dims(&self) -> Vec<i64> {
        self.irr
            .iter()
            .map(|c| {
                i64::try_from(&c.degree().to_integer().expect("integral degree")).expect("small")
            })
            .collect()
    }

    /// Multiplicities of the irreducibles in `chi`; errors unless they are
    /// all natural numbers.
    pub fn decompose(&self, chi: &ClassFunction) -> Result<Vec<i64>> {
        self.irr
            .iter()
            .map(|irr| {
                let m = chi.inner_product(irr)?;
                match m.to_integer() {
                    Some(n) if !n.is_negative() => {
                        Ok(i64::try_from(&n).expect("small multiplicity"))
                    }
                    _ => Err(Error::NotACharacter(
                        self.group.name().to_string(),
                        m.to_string(),
                    )),
                }
            })
            .collect()
    }

    /// Both orthogonality relations, the count of irreducibles and the sum
    /// of squared degrees, all exactly.
    pub fn verify(&self) -> Result<()> {
        let g = &self.group;
        let fail = |msg: String| Err(Error::CharacterTable(g.name().to_string(), msg));
        if self.irr.len() != g.num_classes() {
            return fail(format!(
                "{} irreducibles for {} classes",
                self.irr.len(),
                g.num_classes()
            ));
        }
        let dims = self.dims();
        if dims.iter().any(|&d| d <= 0)
            || dims.iter().map(|d| d * d).sum::<i64>() != g.order() as i64
        {
            return fail("sum of squared degrees differs from the order".into());
        }
        for (i, a) in self.irr.iter().enumerate() {
            for (j, b) in self.irr.iter().enumerate() {
                let ip = a.inner_product(b)?;
                if ip != CycNum::from_int(i64::from(i == j)) {
                    return fail(format!("row orthogonality fails at ({i},{j})"));
                }
            }
        }
        let n = g.order() as i64;
        for c1 in 0..g.num_classes() {
            for c2 in 0..g.num_classes() {
                let s: CycNum = self
                    .irr
                    .iter()
                    .map(|chi| chi.value(c1) * &chi.value(c2).conj())
                    .sum();
                let expect = if c1 == c2 {
                    n / g.classes()[c1].size() as i64
                } else {
                    0
                };
                if s != CycNum::from_int(expect) {
                    return fail(format!("column orthogonality fails at ({c1},{c2})"));
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct ClassOut<'a> {
            label: &'a str,
            size: usize,
        }
        #[derive(Serialize)]
        struct IrrOut<'a> {
            label: &'a str,
            values: &'a [CycNum],
        }
        let classes: Vec<ClassOut> = self
            .group
            .classes()
            .iter()
            .map(|c| ClassOut {
                label: &c.label,
                size: c.size(),
            })
            .collect();
        let irr: Vec<IrrOut> = self
            .irr
            .iter()
            .zip(&self.labels)
            .map(|(chi, l)| IrrOut {
                label: l,
                values: chi.values(),
            })
            .collect();
        serde_json::json!({ "group": self.group.name(), "classes": classes, "irreducibles": irr })
    }
}
