use std::sync::Arc;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exact::CycNum;
use crate::grp::{Group, GroupHom, Perm};

/// A class function, stored as one value per conjugacy class of its group.
#[derive(Clone, Debug)]
pub struct ClassFunction {
    group: Arc<Group>,
    values: Vec<CycNum>,
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.values == other.values
    }
}

fn same_group(a: &Arc<Group>, b: &Arc<Group>) -> Result<()> {
    if Arc::ptr_eq(a, b) {
        Ok(())
    } else {
        Err(Error::GroupMismatch(
            a.name().to_string(),
            b.name().to_string(),
        ))
    }
}

impl ClassFunction {
    pub fn new(group: Arc<Group>, values: Vec<CycNum>) -> Self {
        assert_eq!(values.len(), group.num_classes());
        ClassFunction { group, values }
    }

    pub fn trivial(group: &Arc<Group>) -> Self {
        Self::new(group.clone(), vec![CycNum::one(); group.num_classes()])
    }

    pub fn zero(group: &Arc<Group>) -> Self {
        Self::new(group.clone(), vec![CycNum::zero(); group.num_classes()])
    }

    /// The class function `g -> f(g)`, evaluated on class representatives.
    pub fn from_fn(group: &Arc<Group>, mut f: impl FnMut(&Perm) -> CycNum) -> Self {
        let values = (0..group.num_classes())
            .map(|c| f(group.class_rep(c)))
            .collect();
        Self::new(group.clone(), values)
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn values(&self) -> &[CycNum] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &CycNum {
        &self.values[class]
    }

    /// Value at an element given by index.
    pub fn at(&self, x: usize) -> &CycNum {
        &self.values[self.group.class_of(x)]
    }

    pub fn value_at(&self, p: &Perm) -> Result<&CycNum> {
        Ok(&self.values[self.group.class_of_perm(p)?])
    }

    /// Value at the identity.
    pub fn degree(&self) -> &CycNum {
        &self.values[0]
    }

    pub fn conj(&self) -> Self {
        Self::new(
            self.group.clone(),
            self.values.iter().map(CycNum::conj).collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        same_group(&self.group, &other.group)?;
        Ok(Self::new(
            self.group.clone(),
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    pub fn scale(&self, c: &CycNum) -> Self {
        Self::new(
            self.group.clone(),
            self.values.iter().map(|a| a * c).collect(),
        )
    }

    /// Pointwise product (tensor product of characters).
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        same_group(&self.group, &other.group)?;
        Ok(Self::new(
            self.group.clone(),
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a * b)
                .collect(),
        ))
    }

    /// `(1/|G|) sum_g chi(g) conj(psi(g))`.
    pub fn inner_product(&self, other: &Self) -> Result<CycNum> {
        same_group(&self.group, &other.group)?;
        let mut acc = CycNum::zero();
        for (c, class) in self.group.classes().iter().enumerate() {
            let term = &self.values[c] * &other.values[c].conj();
            acc += &term.scale_int(class.size() as i64);
        }
        Ok(acc.scale(&BigRational::new(
            1.into(),
            (self.group.order() as i64).into(),
        )))
    }

    /// Restriction to a subgroup given by its own group object.
    pub fn restrict(&self, h: &Arc<Group>) -> Result<Self> {
        if !self.group.contains_group(h) {
            return Err(Error::NotContained {
                sub: h.name().to_string(),
                sup: self.group.name().to_string(),
            });
        }
        let values = (0..h.num_classes())
            .map(|c| self.value_at(h.class_rep(c)).cloned())
            .collect::<Result<_>>()?;
        Ok(Self::new(h.clone(), values))
    }

    /// Induction to an overgroup `g`.
    ///
    /// Each element of the subgroup contributes to the class of `g` it lies
    /// in, then `Ind(x) = |G| / (|H| |cl(x)|) * sum_{h in H ∩ cl(x)} psi(h)`.
    pub fn induce(&self, g: &Arc<Group>) -> Result<Self> {
        let h = &self.group;
        if !g.contains_group(h) {
            return Err(Error::NotContained {
                sub: h.name().to_string(),
                sup: g.name().to_string(),
            });
        }
        let mut sums = vec![CycNum::zero(); g.num_classes()];
        for (x, p) in h.elements().iter().enumerate() {
            let c = g.class_of_perm(p)?;
            sums[c] += self.at(x);
        }
        let values = sums
            .into_iter()
            .enumerate()
            .map(|(c, s)| {
                let num = g.order() as i64;
                let den = (h.order() * g.classes()[c].size()) as i64;
                s.scale(&BigRational::new(num.into(), den.into()))
            })
            .collect();
        Ok(Self::new(g.clone(), values))
    }

    /// `self ∘ p` for any homomorphism `p` into this function's group.
    pub fn pullback(&self, p: &GroupHom) -> Result<Self> {
        if !self.group.same_elements(p.target()) {
            return Err(Error::GroupMismatch(
                self.group.name().into(),
                p.target().name().into(),
            ));
        }
        let src = p.source().clone();
        let values = (0..src.num_classes())
            .map(|c| {
                let y = p.apply(src.classes()[c].rep);
                self.value_at(p.target().element(y)).cloned()
            })
            .collect::<Result<_>>()?;
        Ok(Self::new(src, values))
    }

    /// Inflation along a surjection onto this function's group.
    pub fn inflate(&self, p: &GroupHom) -> Result<Self> {
        if !p.is_surjective() {
            return Err(Error::Construction(format!(
                "inflation along non-surjective {}",
                p.source().name()
            )));
        }
        self.pullback(p)
    }

    /// Transport to a conjugate subgroup: the result lives on `target` and
    /// satisfies `f'(k) = f(g^-1 k g)`.
    pub fn transport(&self, g: &Perm, target: &Arc<Group>) -> Result<Self> {
        let ginv = g.inverse();
        let values = (0..target.num_classes())
            .map(|c| {
                self.value_at(&target.class_rep(c).conjugate_by(&ginv))
                    .cloned()
            })
            .collect::<Result<_>>()?;
        Ok(Self::new(target.clone(), values))
    }
}
