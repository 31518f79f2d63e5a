use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use serde_json::{json, Value};

use super::{MPair, MSpace};
use crate::error::{Error, Result};
use crate::exact::{parse_rational, CycNum};

/// An element of `C[M(G)]`, stored densely in the order of `MSpace::pairs`.
#[derive(Clone)]
pub struct MVector {
    space: Arc<MSpace>,
    coeffs: Vec<CycNum>,
}

impl PartialEq for MVector {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.space, &other.space) && self.coeffs == other.coeffs
    }
}

impl MVector {
    pub fn zero(space: &Arc<MSpace>) -> Self {
        MVector {
            space: space.clone(),
            coeffs: vec![CycNum::zero(); space.len()],
        }
    }

    pub fn from_coeffs(space: &Arc<MSpace>, coeffs: Vec<CycNum>) -> Self {
        assert_eq!(coeffs.len(), space.len());
        MVector {
            space: space.clone(),
            coeffs,
        }
    }

    /// The basis vector of a single pair.
    pub fn basis(space: &Arc<MSpace>, p: MPair) -> Self {
        let mut v = Self::zero(space);
        v.set(p, CycNum::one());
        v
    }

    /// Sum of `coeff * (x, sigma)` over labelled terms.
    pub fn from_terms(space: &Arc<MSpace>, terms: &[(&str, &str, CycNum)]) -> Result<Self> {
        let mut v = Self::zero(space);
        for (x, s, c) in terms {
            let p = space.find(x, s)?;
            v.add_at(p, c);
        }
        Ok(v)
    }

    pub fn space(&self) -> &Arc<MSpace> {
        &self.space
    }

    pub fn coeffs(&self) -> &[CycNum] {
        &self.coeffs
    }

    pub fn get(&self, p: MPair) -> &CycNum {
        &self.coeffs[self.space.index(p)]
    }

    pub fn set(&mut self, p: MPair, c: CycNum) {
        let i = self.space.index(p);
        self.coeffs[i] = c;
    }

    pub fn add_at(&mut self, p: MPair, c: &CycNum) {
        let i = self.space.index(p);
        self.coeffs[i] += c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(CycNum::is_zero)
    }

    /// Pairs with nonzero coefficient, in order.
    pub fn support(&self) -> Vec<MPair> {
        self.space
            .pairs()
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(p, _)| *p)
            .collect()
    }

    pub(crate) fn check_space(&self, space: &MSpace) -> Result<()> {
        if std::ptr::eq(Arc::as_ptr(&self.space), space) {
            Ok(())
        } else {
            Err(space.mismatch(&self.space))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        other.check_space(&self.space)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self::from_coeffs(&self.space, coeffs))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        other.check_space(&self.space)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Self::from_coeffs(&self.space, coeffs))
    }

    pub fn scale(&self, c: &CycNum) -> Self {
        Self::from_coeffs(&self.space, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn scale_rational(&self, r: &BigRational) -> Self {
        Self::from_coeffs(
            &self.space,
            self.coeffs.iter().map(|a| a.scale(r)).collect(),
        )
    }

    /// Every coefficient is real and `>= 0`.
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
            .into_iter()
            .map(|p| {
                let (x, s) = self.space.labels(p);
                json!({ "x": x, "sigma": s, "coeff": self.get(p) })
            })
            .collect();
        json!({ "group": self.space.group().name(), "terms": terms })
    }

    /// Reads the JSON form; a coefficient may also be a single rational
    /// string such as `"3/2"`.
    pub fn from_json(space: &Arc<MSpace>, v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Parse(m.to_string());
        let group = v
            .get("group")
            .and_then(Value::as_str)
            .ok_or_else(|| bad("missing group"))?;
        if group != space.group().name() {
            return Err(Error::GroupMismatch(
                group.to_string(),
                space.group().name().to_string(),
            ));
        }
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing terms"))?;
        let mut out = Self::zero(space);
        for t in terms {
            let x = t
                .get("x")
                .and_then(Value::as_str)
                .ok_or_else(|| bad("term without x"))?;
            let s = t
                .get("sigma")
                .and_then(Value::as_str)
                .ok_or_else(|| bad("term without sigma"))?;
            let c = match t.get("coeff") {
                Some(Value::String(r)) => CycNum::from_rational(&parse_rational(r)?),
                Some(Value::Number(n)) => CycNum::from_rational(&parse_rational(&n.to_string())?),
                Some(c) => serde_json::from_value(c.clone()).map_err(|e| bad(&e.to_string()))?,
                None => return Err(bad("term without coeff")),
            };
            out.add_at(space.find(x, s)?, &c);
        }
        Ok(out)
    }
}

impl fmt::Display for MVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let support = self.support();
        if support.is_empty() {
            return write!(f, "0");
        }
        for (k, p) in support.into_iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let c = self.get(p);
            let label = self.space.pair_label(p);
            if c.is_one() {
                write!(f, "{label}")?;
            } else if c.to_rational().is_some() {
                write!(f, "{c}{label}")?;
            } else {
                write!(f, "({c}){label}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MVector[{}]({self})", self.space.group().name())
    }
}
