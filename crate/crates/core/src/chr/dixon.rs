//! Irreducible characters by simultaneous diagonalization of the class
//! matrices modulo a prime `p = 1 (mod 60)`, lifted to exact values.

use crate::error::{Error, Result};
use crate::exact::{CycNum, CONDUCTOR};
use crate::grp::Group;

const P: u64 = 1021;

fn pow_mod(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    b %= P;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64) -> u64 {
    pow_mod(a, P - 2)
}

/// A primitive 60th root of unity in F_p.
fn root60() -> u64 {
    let n = P - 1;
    let primes = [2, 3, 5, 17];
    let g = (2..P)
        .find(|&g| primes.iter().all(|&q| pow_mod(g, n / q) != 1))
        .expect("F_p* is cyclic");
    pow_mod(g, n / CONDUCTOR as u64)
}

/// Reduced row echelon form in place; returns pivot columns.
fn rref(rows: &mut Vec<Vec<u64>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(k) = (r..rows.len()).find(|&k| rows[k][c] != 0) else {
            continue;
        };
        rows.swap(r, k);
        let s = inv_mod(rows[r][c]);
        for v in rows[r].iter_mut() {
            *v = *v * s % P;
        }
        for k in 0..rows.len() {
            if k != r && rows[k][c] != 0 {
                let f = rows[k][c];
                for j in 0..ncols {
                    rows[k][j] = (rows[k][j] + P * P - f * rows[r][j]) % P;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Basis of the null space of a square matrix.
fn null_space(m: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let n = m.len();
    let mut rows = m.to_vec();
    let pivots = rref(&mut rows);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; n];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (P - rows[r][f]) % P;
            }
            v
        })
        .collect()
}

/// A subspace of F_p^r held as an RREF basis with its pivot columns.
struct Space {
    basis: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Space {
    fn new(mut basis: Vec<Vec<u64>>) -> Self {
        let pivots = rref(&mut basis);
        Space { basis, pivots }
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Splits into eigenspaces of the (invariant) operator `m`.
    fn split(&self, m: &[Vec<u64>]) -> Vec<Space> {
        let k = self.dim();
        let r = m.len();
        // images of basis vectors, expressed in pivot coordinates
        let images: Vec<Vec<u64>> = self
            .basis
            .iter()
            .map(|b| {
                (0..r)
                    .map(|i| (0..r).map(|j| m[i][j] * b[j] % P).sum::<u64>() % P)
                    .collect()
            })
            .collect();
        let restricted: Vec<Vec<u64>> = (0..k)
            .map(|a2| (0..k).map(|a| images[a][self.pivots[a2]]).collect())
            .collect();
        let mut out = Vec::new();
        for lambda in 0..P {
            let shifted: Vec<Vec<u64>> = (0..k)
                .map(|i| {
                    (0..k)
                        .map(|j| (restricted[i][j] + if i == j { P - lambda } else { 0 }) % P)
                        .collect()
                })
                .collect();
            let ns = null_space(&shifted);
            if ns.is_empty() {
                continue;
            }
            let vecs = ns
                .iter()
                .map(|c| {
                    (0..r)
                        .map(|j| (0..k).map(|a| c[a] * self.basis[a][j] % P).sum::<u64>() % P)
                        .collect()
                })
                .collect();
            out.push(Space::new(vecs));
        }
        out
    }
}

/// All irreducible characters of `g`, in no particular order.
pub(crate) fn irreducible_characters(g: &Group) -> Result<Vec<Vec<CycNum>>> {
    let fail = |msg: &str| Error::CharacterTable(g.name().to_string(), msg.to_string());
    if !(CONDUCTOR as usize).is_multiple_of(g.exponent()) {
        return Err(Error::Unsupported(format!(
            "{}: exponent {} does not divide 60",
            g.name(),
            g.exponent()
        )));
    }
    let r = g.num_classes();
    let reps: Vec<usize> = g.classes().iter().map(|c| c.rep).collect();
    let sizes: Vec<u64> = g.classes().iter().map(|c| c.size() as u64).collect();
    // class matrices: (M_j)[k][l] = #{x in C_j : x^-1 g_l in C_k}
    let mats: Vec<Vec<Vec<u64>>> = (0..r)
        .map(|j| {
            let mut m = vec![vec![0u64; r]; r];
            for &x in &g.classes()[j].elements {
                let xi = g.inv(x);
                for (l, &gl) in reps.iter().enumerate() {
                    m[g.class_of(g.mul(xi, gl))][l] += 1;
                }
            }
            m
        })
        .collect();
    let identity: Vec<Vec<u64>> = (0..r)
        .map(|i| (0..r).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut spaces = vec![Space::new(identity)];
    loop {
        let before = spaces.len();
        for m in mats.iter().skip(1) {
            spaces = spaces
                .into_iter()
                .flat_map(|s| if s.dim() > 1 { s.split(m) } else { vec![s] })
                .collect();
        }
        if spaces.iter().all(|s| s.dim() == 1) {
            break;
        }
        if spaces.len() == before {
            return Err(fail("class matrices do not separate the characters"));
        }
    }
    if spaces.len() != r {
        return Err(fail("wrong number of simultaneous eigenvectors"));
    }

    let inverse_class: Vec<usize> = reps.iter().map(|&x| g.class_of(g.inv(x))).collect();
    let z = root60();
    let order = g.order() as u64;
    let mut out = Vec::with_capacity(r);
    for s in spaces {
        let w0 = &s.basis[0];
        let scale = inv_mod(w0[0]);
        let w: Vec<u64> = w0.iter().map(|v| v * scale % P).collect();
        let norm = (0..r)
            .map(|l| w[l] * w[inverse_class[l]] % P * inv_mod(sizes[l]) % P)
            .sum::<u64>()
            % P;
        let d2 = order % P * inv_mod(norm) % P;
        let d = (1..=(P - 1) / 2)
            .find(|&d| d * d % P == d2)
            .ok_or_else(|| fail("degree is not a square"))?;
        let chi_mod: Vec<u64> = (0..r)
            .map(|l| w[l] * d % P * inv_mod(sizes[l]) % P)
            .collect();
        let mut values = Vec::with_capacity(r);
        for &x in &reps {
            let o = g.element_order(x);
            let step = CONDUCTOR as u64 / o as u64;
            let zo = pow_mod(z, step);
            let powers: Vec<u64> = (0..o).map(|j| chi_mod[g.class_of(g.pow(x, j))]).collect();
            let inv_o = inv_mod(o as u64);
            let mut value = CycNum::zero();
            for k in 0..o {
                let m = (0..o)
                    .map(|j| powers[j] * pow_mod(zo, (P - 1) - (k * j) as u64 % (P - 1)) % P)
                    .sum::<u64>()
                    % P
                    * inv_o
                    % P;
                if m > d {
                    return Err(fail("eigenvalue multiplicity out of range"));
                }
                if m > 0 {
                    value += &CycNum::zeta60((step * k as u64) as i64).scale_int(m as i64);
                }
            }
            values.push(value);
        }
        out.push(values);
    }
    Ok(out)
}
