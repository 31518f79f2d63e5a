//! The space `V_D` over `F_2` with basis `e_1, .., e_D` and the form
//! `(e_i, e_j) = 1` iff `|i - j| = 1`, functions on it, and its Fourier
//! transform. Vectors are bitmasks: bit `i - 1` is the coordinate of `e_i`.

use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::CycNum;
use crate::grp::Perm;
use crate::mspace::{MPair, MSpace, MVector};


/// Largest `D` for which functions on `V_D` are materialized (`2^D` values).
pub const DEFAULT_MAX_D: usize = 16;

fn check_d(d: usize) -> Result<()> {
    if !d.is_multiple_of(2) {
        return Err(Error::Unsupported(format!("D = {d} is odd")));
    }
    if d > DEFAULT_MAX_D {
        return Err(Error::Unsupported(format!(
            "D = {d} exceeds the limit {DEFAULT_MAX_D}"
        )));
    }
    Ok(())
}

fn mask(d: usize) -> u32 {
    if d == 0 {
        0
    } else {
        u32::MAX >> (32 - d)
    }
}

/// The rank `D - 1` of `V_{D-1}^1`, which is identified with the group
/// `V'_D^1` for odd `D` by matching the bases.
pub fn odd_alias(d: usize) -> Result<usize> {
    if d % 2 == 1 {
        Ok(d - 1)
    } else {
        Err(Error::Unsupported(format!("D = {d} is even")))
    }
}

/// An element of `V_D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2Vector {
    d: usize,
    bits: u32,
}

impl F2Vector {
    pub fn new(d: usize, bits: u32) -> Result<Self> {
        check_d(d)?;
        if bits & !mask(d) != 0 {
            return Err(Error::Unsupported(format!("bits {bits:#b} outside V_{d}")));
        }
        Ok(F2Vector { d, bits })
    }

    pub fn zero(d: usize) -> Result<Self> {
        Self::new(d, 0)
    }

    /// `e_i` for `1 <= i <= D`.
    pub fn e(d: usize, i: usize) -> Result<Self> {
        if i == 0 || i > d {
            return Err(Error::Unsupported(format!(
                "e_{i} is not a basis vector of V_{d}"
            )));
        }
        Self::new(d, 1 << (i - 1))
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        same_d(self.d, other.d)?;
        Ok(F2Vector {
            d: self.d,
            bits: self.bits ^ other.bits,
        })
    }

    /// Parses the string form written by `Display`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut bits = 0;
        for (i, c) in s.chars().enumerate() {
            match c {
                '1' => bits |= 1 << i,
                '0' => {}
                _ => return Err(Error::Parse(format!("bad bit string {s}"))),
            }
        }
        Self::new(s.len(), bits)
    }
}

/// Coordinates of `e_1, .., e_D` in order.
impl fmt::Display for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.d {
            f.write_str(if self.bits >> i & 1 == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

fn same_d(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::Unsupported(format!("vectors of V_{a} and V_{b}")))
    }
}

/// `J y` with `(x, y) = <x, J y>` for the standard dot product.
fn adjacent(d: usize, y: u32) -> u32 {
    ((y << 1) ^ (y >> 1)) & mask(d)
}

fn form_bits(d: usize, x: u32, y: u32) -> bool {
    (x & adjacent(d, y)).count_ones() % 2 == 1
}

/// The symplectic form.
pub fn form(x: &F2Vector, y: &F2Vector) -> Result<bool> {
    same_d(x.d, y.d)?;
    Ok(form_bits(x.d, x.bits, y.bits))
}

/// A function `V_D -> Q(zeta_60)`.
#[derive(Clone, Debug, PartialEq)]
pub struct VDFunction {
    d: usize,
    coeffs: Vec<CycNum>,
}

impl VDFunction {
    pub fn zero(d: usize) -> Result<Self> {
        check_d(d)?;
        Ok(VDFunction {
            d,
            coeffs: vec![CycNum::zero(); 1 << d],
        })
    }

    /// The characteristic function of a set of vectors.
    pub fn indicator(d: usize, points: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut f = Self::zero(d)?;
        for p in points {
            let p = F2Vector::new(d, p)?;
            f.coeffs[p.bits as usize] = CycNum::one();
        }
        Ok(f)
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn coeffs(&self) -> &[CycNum] {
        &self.coeffs
    }

    pub fn get(&self, x: &F2Vector) -> &CycNum {
        &self.coeffs[x.bits as usize]
    }

    pub fn set(&mut self, x: &F2Vector, c: CycNum) {
        self.coeffs[x.bits as usize] = c;
    }

    pub fn support(&self) -> Vec<F2Vector> {
        (0..self.coeffs.len())
            .filter(|&i| !self.coeffs[i].is_zero())
            .map(|i| F2Vector {
                d: self.d,
                bits: i as u32,
            })
            .collect()
    }

    /// Every value is real and `>= 0`.
    pub fn is_nonnegative(&self) -> Result<bool> {
        for c in &self.coeffs {
            if c.real_sign()? < 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .support()
            .iter()
            .map(|x| json!({ "bits": x.to_string(), "coeff": self.get(x) }))
            .collect();
        json!({ "D": self.d, "terms": terms })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Parse(m.to_string());
        let d = v["D"].as_u64().ok_or_else(|| bad("missing D"))? as usize;
        let mut f = Self::zero(d)?;
        for t in v["terms"].as_array().ok_or_else(|| bad("missing terms"))? {
            let x = F2Vector::parse(t["bits"].as_str().ok_or_else(|| bad("missing bits"))?)?;
            same_d(x.d, d)?;
            let c: CycNum =
                serde_json::from_value(t["coeff"].clone()).map_err(|e| bad(&e.to_string()))?;
            f.set(&x, c);
        }
        Ok(f)
    }
}

/// The characteristic function of `pi^k`, the span of
/// `e_j + e_{j+1} + .. + e_{D+1-j}` for `1 <= j <= k`.
pub fn p_k(d: usize, k: usize) -> Result<VDFunction> {
    check_d(d)?;
    if k > d / 2 {
        return Err(Error::Unsupported(format!("P^{k} needs k <= {}", d / 2)));
    }
    let gens: Vec<u32> = (1..=k).map(|j| mask(d + 1 - j) & !mask(j - 1)).collect();
    let span = (0..1u32 << k).map(|c| {
        gens.iter()
            .enumerate()
            .filter(|(i, _)| c >> i & 1 == 1)
            .fold(0, |acc, (_, g)| acc ^ g)
    });
    VDFunction::indicator(d, span)
}

/// Image of `e_i` under the rotation `e_i -> e_{i+1}`, `e_D -> e_1 + .. + e_D`.
fn iota_bits(d: usize, x: u32) -> u32 {
    let mut out = 0;
    for i in 0..d {
        if x >> i & 1 == 1 {
            out ^= if i + 1 < d { 1 << (i + 1) } else { mask(d) };
        }
    }
    out
}

/// The rotation applied to a vector.
pub fn iota_vector(x: &F2Vector) -> F2Vector {
    F2Vector {
        d: x.d,
        bits: iota_bits(x.d, x.bits),
    }
}

/// Push-forward of a function along the rotation.
pub fn iota(v: &VDFunction) -> VDFunction {
    let mut out = vec![CycNum::zero(); v.coeffs.len()];
    for (x, c) in v.coeffs.iter().enumerate() {
        out[iota_bits(v.d, x as u32) as usize] = c.clone();
    }
    VDFunction {
        d: v.d,
        coeffs: out,
    }
}

fn normalizer(d: usize) -> BigRational {
    BigRational::new(1.into(), num_bigint::BigInt::from(1u64 << (d / 2)))
}

/// `x -> 2^(-D/2) sum_y (-1)^(x,y) y`, by a Walsh-Hadamard pass followed by
/// the substitution `z = J y`.
pub fn fourier_vd(v: &VDFunction) -> VDFunction {
    let d = v.d;
    let mut w = v.coeffs.clone();
    let mut h = 1;
    while h < w.len() {
        for block in (0..w.len()).step_by(2 * h) {
            for i in block..block + h {
                let (a, b) = (w[i].clone(), w[i + h].clone());
                w[i] = &a + &b;
                w[i + h] = &a - &b;
            }
        }
        h *= 2;
    }
    let s = normalizer(d);
    let coeffs = (0..w.len())
        .map(|y| w[adjacent(d, y as u32) as usize].scale(&s))
        .collect();
    VDFunction { d, coeffs }
}

/// The same transform by direct summation.
pub fn fourier_vd_direct(v: &VDFunction) -> VDFunction {
    let d = v.d;
    let n = v.coeffs.len();
    let s = normalizer(d);
    let coeffs = (0..n as u32)
        .map(|y| {
            let mut acc = CycNum::zero();
            for (x, c) in v.coeffs.iter().enumerate() {
                if form_bits(d, x as u32, y) {
                    acc -= c;
                } else {
                    acc += c;
                }
            }
            acc.scale(&s)
        })
        .collect();
    VDFunction { d, coeffs }
}

/// `x = x_1 + x_0` with `x_1` in the span `V_D^1` of the odd `e_i` and
/// `x_0` in the span of the even ones.
pub fn split(x: &F2Vector) -> (F2Vector, F2Vector) {
    let odd = (0..x.d).step_by(2).fold(0u32, |m, i| m | 1 << i);
    (
        F2Vector {
            d: x.d,
            bits: x.bits & odd,
        },
        F2Vector {
            d: x.d,
            bits: x.bits & !odd,
        },
    )
}

/// The pair `(x_1, s)` of `M(V_D^1)` attached to `x`, with the character
/// `s` given by its signs `(-1)^(x_0, e_1), (-1)^(x_0, e_3), ..` (`true`
/// for `-1`).
pub fn m_identification(x: &F2Vector) -> (F2Vector, Vec<bool>) {
    let (x1, x0) = split(x);
    let signs = (0..x.d)
        .step_by(2)
        .map(|i| form_bits(x.d, x0.bits, 1 << i))
        .collect();
    (x1, signs)
}

/// Transfers a function on `V_D` to `C[M(G)]` for an elementary abelian
/// group `G` whose generators `gens[j]` are the images of `e_{2j+1}`.
pub fn to_mspace(v: &VDFunction, space: &Arc<MSpace>, gens: &[Perm]) -> Result<MVector> {
    let g = space.group();
    if gens.len() * 2 != v.d || g.order() != 1 << gens.len() || !g.is_abelian() {
        return Err(Error::Unsupported(format!(
            "{} does not match V_{}^1",
            g.name(),
            v.d
        )));
    }
    for p in gens {
        g.member(p)?;
    }
    let mut out = MVector::zero(space);
    for x in v.support() {
        let (x1, signs) = m_identification(&x);
        let elem = (0..gens.len())
            .filter(|j| x1.bits >> (2 * j) & 1 == 1)
            .fold(Perm::identity(g.degree()), |acc, j| acc.compose(&gens[j]));
        let class = g.class_of_perm(&elem)?;
        let table = space.table(class);
        let mut found = None;
        for (i, chi) in table.irreducibles().iter().enumerate() {
            let mut ok = true;
            for (p, &neg) in gens.iter().zip(&signs) {
                ok &= *chi.value_at(p)? == CycNum::from_int(if neg { -1 } else { 1 });
            }
            if ok {
                found = Some(i);
            }
        }
        let irr = found
            .ok_or_else(|| Error::Construction("no character with the required signs".into()))?;
        out.add_at(MPair { class, irr }, v.get(&x));
    }
    Ok(out)
}

/// The group model and images of `e_1, e_3, ..` used to compare with the
/// permutation-group side: `S2` for `D = 2` and `S2xS2` for `D = 4`.
pub fn standard_model(d: usize) -> Result<(&'static str, Vec<Perm>)> {
    match d {
        2 => Ok(("S2", vec![Perm::parse(2, "(1 2)")?])),
        4 => Ok((
            "S2xS2",
            vec![Perm::parse(4, "(1 2)(3 4)")?, Perm::parse(4, "(3 4)")?],
        )),
        _ => Err(Error::Unsupported(format!(
            "no permutation model for V_{d}"
        ))),
    }
}

/// `P^(D/2)` is Lagrangian: value 1 at 0 and fixed by the transform.
pub fn is_lagrangian(v: &VDFunction) -> bool {
    v.coeffs[0].is_one() && fourier_vd(v) == *v && v.coeffs.iter().all(CycNum::is_natural)
}

/// The function and its transform are both nonnegative.
pub fn is_bipositive(v: &VDFunction) -> Result<bool> {
    Ok(v.is_nonnegative()? && fourier_vd(v).is_nonnegative()?)
}

/// The distinct images of `v` under the powers of the rotation.
pub fn iota_orbit(v: &VDFunction) -> Vec<VDFunction> {
    let mut out = vec![v.clone()];
    loop {
        let next = iota(out.last().expect("nonempty"));
        if next == *v {
            return out;
        }
        out.push(next);
    }
}
