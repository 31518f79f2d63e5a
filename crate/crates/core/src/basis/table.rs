use std::fmt;

use super::build::NewBasis;
use crate::error::Result;

/// One row "piece | (x,s) | (x,s)^! | (H,H') | sign" of a basis table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub piece: String,
    pub pair: String,
    pub partner: String,
    pub xbar: String,
    pub sign: i64,
}

impl fmt::Display for TableRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} | {} | {} | {} | {}",
            self.piece, self.pair, self.partner, self.xbar, self.sign
        )
    }
}

/// The order in which the rows of each table are listed, by `(x, s)`.
pub fn table_row_order(gamma: &str) -> Option<Vec<(&'static str, &'static str)>> {
    let rows: &[(&str, &str)] = match gamma {
        "S1" => &[("1", "1")],
        "S2" => &[("1", "1"), ("1", "eps"), ("g2", "1"), ("g2", "eps")],
        "S3" => &[
            ("1", "1"),
            ("1", "r"),
            ("1", "eps"),
            ("g2", "1"),
            ("g3", "1"),
            ("g2", "eps"),
            ("g3", "theta^2"),
            ("g3", "theta"),
        ],
        "S4" => &[
            ("1", "1"),
            ("1", "lambda^1"),
            ("1", "sigma"),
            ("1", "lambda^2"),
            ("1", "lambda^3"),
            ("g2", "1"),
            ("g2'", "1"),
            ("g2", "eps''"),
            ("g3", "1"),
            ("g4", "1"),
            ("g2'", "eps''"),
            ("g2'", "eps'"),
            ("g2", "eps'"),
            ("g2'", "r"),
            ("g4", "-1"),
            ("g2", "eps"),
            ("g2'", "eps"),
            ("g3", "theta^2"),
            ("g3", "theta"),
            ("g4", "-i"),
            ("g4", "i"),
        ],
        "S5" => &[
            ("1", "1"),
            ("1", "lambda^1"),
            ("1", "nu"),
            ("1", "lambda^2"),
            ("1", "nu'"),
            ("1", "lambda^3"),
            ("1", "lambda^4"),
            ("g2", "1"),
            ("g2", "r"),
            ("g3", "1"),
            ("g2'", "1"),
            ("g2'", "eps''"),
            ("g6", "1"),
            ("g2", "eps"),
            ("g3", "eps"),
            ("g4", "1"),
            ("g5", "1"),
            ("g2'", "eps'"),
            ("g2", "-1"),
            ("g2", "-r"),
            ("g2'", "r"),
            ("g4", "-1"),
            ("g6", "-1"),
            ("g2", "-eps"),
            ("g2'", "eps"),
            ("g3", "theta^2"),
            ("g3", "theta"),
            ("g6", "theta^2"),
            ("g6", "theta"),
            ("g3", "eps*theta^2"),
            ("g3", "eps*theta"),
            ("g4", "-i"),
            ("g4", "i"),
            ("g5", "zeta^4"),
            ("g5", "zeta^3"),
            ("g5", "zeta^2"),
            ("g5", "zeta"),
            ("g6", "-theta^2"),
            ("g6", "-theta"),
        ],
        _ => return None,
    };
    Some(rows.to_vec())
}

impl NewBasis {
    /// Rows of the basis table: the piece and pair `(H,H')` of `h(x,s)`,
    /// the partner `(x,s)^!` and the sign of `h((x,s)^!)`.
    pub fn table_rows(&self) -> Result<Vec<TableRow>> {
        let space = self.space();
        let name = space.group().name();
        let order: Vec<_> = match table_row_order(name) {
            Some(rows) => rows
                .into_iter()
                .map(|(x, s)| space.find(x, s))
                .collect::<Result<_>>()?,
            None => space.pairs().to_vec(),
        };
        Ok(order
            .into_iter()
            .map(|p| {
                let e = self.hat(p);
                let partner = self.shriek_pair(p);
                TableRow {
                    piece: e.piece.clone(),
                    pair: space.pair_label(p),
                    partner: space.pair_label(partner),
                    xbar: e.pair.to_string(),
                    sign: self.hat(partner).sign,
                }
            })
            .collect())
    }

    /// The table as text, one row per line.
    pub fn table_text(&self) -> Result<String> {
        Ok(self
            .table_rows()?
            .iter()
            .map(|r| format!("{r}\n"))
            .collect())
    }
}
