//! Gauss-Jordan elimination over the cyclotomic field.

use crate::error::{Error, Result};
use crate::exact::CycNum;

pub type Matrix = Vec<Vec<CycNum>>;

/// Row-reduces `m` in place and returns the pivot columns.
fn row_reduce(m: &mut Matrix, ncols: usize) -> Result<Vec<usize>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(k) = (r..m.len()).find(|&k| !m[k][c].is_zero()) else {
            continue;
        };
        m.swap(r, k);
        if !m[r][c].is_one() {
            let s = m[r][c].inv()?;
            for v in m[r].iter_mut() {
                if !v.is_zero() {
                    *v = &*v * &s;
                }
            }
        }
        let pivot_row = m[r].clone();
        for (k, row) in m.iter_mut().enumerate() {
            if k == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &(&f * p);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    Ok(pivots)
}

/// Rank of a matrix given by rows.
pub fn rank(rows: &[Vec<CycNum>]) -> Result<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut m = rows.to_vec();
    Ok(row_reduce(&mut m, ncols)?.len())
}

/// Coordinates of each target in terms of the given basis vectors:
/// returns `c` with `targets[t] = sum_i c[t][i] * basis[i]`.
pub fn coordinates(basis: &[Vec<CycNum>], targets: &[Vec<CycNum>]) -> Result<Matrix> {
    let n = basis.len();
    let dim = basis.first().map_or(0, Vec::len);
    // columns: basis vectors, then targets
    let mut m: Matrix = (0..dim)
        .map(|j| basis.iter().chain(targets).map(|v| v[j].clone()).collect())
        .collect();
    let pivots = row_reduce(&mut m, n)?;
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| i != p) {
        return Err(Error::Construction(
            "basis vectors are linearly dependent".into(),
        ));
    }
    if m[n..]
        .iter()
        .any(|row| row[n..].iter().any(|v| !v.is_zero()))
    {
        return Err(Error::Construction(
            "target outside the span of the basis".into(),
        ));
    }
    Ok((0..targets.len())
        .map(|t| (0..n).map(|i| m[i][n + t].clone()).collect())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> CycNum {
        CycNum::from_int(n)
    }

    #[test]
    fn rank_and_coordinates() {
        let b = vec![
            vec![q(1), q(1), q(0)],
            vec![q(0), q(1), q(1)],
            vec![q(1), q(0), q(1)],
        ];
        assert_eq!(rank(&b).unwrap(), 3);
        let t = vec![vec![q(2), q(3), q(1)]];
        let c = coordinates(&b, &t).unwrap();
        let back: Vec<CycNum> = (0..3)
            .map(|j| (0..3).map(|i| &c[0][i] * &b[i][j]).sum())
            .collect();
        assert_eq!(back, t[0]);
        let dep = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        assert_eq!(rank(&dep).unwrap(), 1);
        assert!(coordinates(&dep, &[vec![q(1), q(0)]]).is_err());
        let z = CycNum::zeta60(7);
        let b = vec![vec![z.clone(), q(1)], vec![q(0), z.conj()]];
        let c = coordinates(&b, &[vec![q(1), q(1)]]).unwrap();
        assert_eq!(&c[0][0] * &z, q(1));
    }
}
