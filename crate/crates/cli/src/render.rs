//! Output of each verb in the three formats.

use std::sync::Arc;

use newbasis::basis::{build_basis, cyclic_space, NewBasis};
use newbasis::exact::CycNum;
use newbasis::mspace::{model_space, MSpace};
use newbasis::symplectic::{fourier_vd, iota, p_k, VDFunction};
use serde_json::{json, Value};

use crate::verify::Check;
use crate::{BasisKind, Failure, Format};

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn csv_text(
    header: &[&str],
    rows: impl IntoIterator<Item = Vec<String>>,
) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Failure::Usage(e.to_string());
    w.write_record(header).map_err(io)?;
    for r in rows {
        w.write_record(&r).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("utf-8"))
}

pub fn table(group: &str, f: Format) -> Result<String, Failure> {
    let b = build_basis(group)?;
    let rows = b.table_rows()?;
    Ok(match f {
        Format::Text => b.table_text()?,
        Format::Json => json_text(&Value::Array(
            rows.iter()
                .map(|r| {
                    json!({
                        "piece": r.piece, "element": r.pair, "partner": r.partner,
                        "pair": r.xbar, "sign": r.sign,
                    })
                })
                .collect(),
        )),
        Format::Csv => csv_text(
            &["piece", "element", "partner", "pair", "sign"],
            rows.iter().map(|r| {
                vec![
                    r.piece.clone(),
                    r.pair.clone(),
                    r.partner.clone(),
                    r.xbar.clone(),
                    r.sign.to_string(),
                ]
            }),
        )?,
    })
}

pub fn basis(group: &str, f: Format) -> Result<String, Failure> {
    let b = build_basis(group)?;
    let sp = b.space();
    Ok(match f {
        Format::Json => json_text(&b.to_json()),
        Format::Text => b
            .elements()
            .iter()
            .map(|e| {
                format!(
                    "h{} = {} [{} {}, {}]\n",
                    sp.pair_label(e.leading),
                    e.vector,
                    e.pair,
                    e.quotient,
                    e.tag
                )
            })
            .collect(),
        Format::Csv => csv_text(
            &[
                "leading",
                "pair",
                "quotient",
                "primitive",
                "piece",
                "delta",
                "sign",
                "vector",
            ],
            b.elements().iter().map(|e| {
                vec![
                    sp.pair_label(e.leading),
                    e.pair.to_string(),
                    e.quotient.clone(),
                    e.tag.to_string(),
                    e.piece.clone(),
                    e.depth.to_string(),
                    e.sign.to_string(),
                    e.vector.to_string(),
                ]
            }),
        )?,
    })
}

fn space_for(group: &str) -> Result<Arc<MSpace>, Failure> {
    if let Some(n) = group
        .strip_prefix('C')
        .and_then(|n| n.parse::<usize>().ok())
    {
        return Ok(cyclic_space(n)?);
    }
    Ok(model_space(group)?)
}

/// A labelled exact matrix with the trace and, for the new basis, the
/// fraction of zero entries.
struct Dump {
    group: String,
    basis: &'static str,
    labels: Vec<String>,
    matrix: Vec<Vec<CycNum>>,
}

impl Dump {
    fn trace(&self) -> CycNum {
        (0..self.matrix.len())
            .map(|i| self.matrix[i][i].clone())
            .sum()
    }

    fn zeros(&self) -> (usize, usize) {
        let n = self.matrix.len();
        (
            self.matrix.iter().flatten().filter(|c| c.is_zero()).count(),
            n * n,
        )
    }
}

fn new_basis_dump(b: &NewBasis) -> Dump {
    let sp = b.space();
    Dump {
        group: sp.group().name().to_string(),
        basis: "new",
        labels: b
            .elements()
            .iter()
            .map(|e| format!("h{}", sp.pair_label(e.leading)))
            .collect(),
        matrix: b.fourier_matrix().clone(),
    }
}

pub fn fourier(group: &str, kind: BasisKind, f: Format) -> Result<String, Failure> {
    let dump = match kind {
        BasisKind::Standard => {
            let sp = space_for(group)?;
            Dump {
                group: sp.group().name().to_string(),
                basis: "standard",
                labels: sp.pairs().iter().map(|&p| sp.pair_label(p)).collect(),
                matrix: sp.pairing_matrix().clone(),
            }
        }
        BasisKind::New => new_basis_dump(&build_basis(group)?),
    };
    let (zeros, total) = dump.zeros();
    Ok(match f {
        Format::Text => {
            let mut s = format!("group {} basis {}\n", dump.group, dump.basis);
            s += &format!("columns: {}\n", dump.labels.join(" "));
            for (label, row) in dump.labels.iter().zip(&dump.matrix) {
                let entries: Vec<String> = row
                    .iter()
                    .map(|c| match c.to_rational() {
                        Some(_) => c.to_string(),
                        None => format!("({c})"),
                    })
                    .collect();
                s += &format!("{label}: {}\n", entries.join(" "));
            }
            s += &format!("trace: {}\n", dump.trace());
            if kind == BasisKind::New {
                s += &format!("zero entries: {zeros}/{total}\n");
            }
            s
        }
        Format::Json => {
            let mut v = json!({
                "group": dump.group, "basis": dump.basis, "labels": dump.labels,
                "matrix": dump.matrix, "trace": dump.trace(),
            });
            if kind == BasisKind::New {
                v["zero_entries"] = json!(zeros);
                v["entries"] = json!(total);
            }
            json_text(&v)
        }
        Format::Csv => {
            let mut header = vec![""];
            header.extend(dump.labels.iter().map(String::as_str));
            csv_text(
                &header,
                dump.labels.iter().zip(&dump.matrix).map(|(l, row)| {
                    std::iter::once(l.clone())
                        .chain(row.iter().map(ToString::to_string))
                        .collect()
                }),
            )?
        }
    })
}

pub fn symplectic(
    d: usize,
    k: usize,
    fourier: bool,
    rotations: usize,
    f: Format,
) -> Result<String, Failure> {
    let mut v: VDFunction = p_k(d, k)?;
    for _ in 0..rotations % (d + 1) {
        v = iota(&v);
    }
    if fourier {
        v = fourier_vd(&v);
    }
    Ok(match f {
        Format::Json => json_text(&v.to_json()),
        Format::Text => v
            .support()
            .iter()
            .map(|x| format!("{x} {}\n", v.get(x)))
            .collect(),
        Format::Csv => csv_text(
            &["bits", "coeff"],
            v.support()
                .iter()
                .map(|x| vec![x.to_string(), v.get(x).to_string()]),
        )?,
    })
}

pub fn report(checks: &[Check], f: Format) -> Result<String, Failure> {
    Ok(match f {
        Format::Text => checks.iter().map(|c| format!("{c}\n")).collect(),
        Format::Json => json_text(&Value::Array(
            checks
                .iter()
                .map(|c| json!({ "check": c.label, "ok": c.ok, "note": c.note }))
                .collect(),
        )),
        Format::Csv => csv_text(
            &["check", "status", "note"],
            checks.iter().map(|c| {
                vec![
                    c.label.clone(),
                    c.status().into(),
                    c.note.clone().unwrap_or_default(),
                ]
            }),
        )?,
    })
}
