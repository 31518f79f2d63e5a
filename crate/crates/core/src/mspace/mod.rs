//! The space spanned by pairs `(x, sigma)`, the pairing between pairs and
//! the Fourier transform it defines.

mod vector;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::BigRational;

use crate::chr::{character_table, CharTable, ClassFunction};
use crate::error::{Error, Result};
use crate::exact::CycNum;
use crate::grp::{quotient_model, Group};

pub use vector::MVector;

/// A pair `(x, sigma)`: a conjugacy class of the group and an irreducible of
/// the centralizer of its representative, both by index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MPair {
    pub class: usize,
    pub irr: usize,
}

/// Data attached to one conjugacy class.
#[derive(Debug)]
pub struct MClass {
    pub label: String,
    /// Index of the representative in the ambient group.
    pub rep: usize,
    pub centralizer: Arc<Group>,
    pub table: Arc<CharTable>,
    /// Class in the centralizer of each ambient element, if it lies there.
    local_class: Vec<Option<usize>>,
}

/// `M(G)` for a finite permutation group `G`.
pub struct MSpace {
    group: Arc<Group>,
    classes: Vec<MClass>,
    pairs: Vec<MPair>,
    offsets: Vec<usize>,
    pairing: OnceLock<Vec<Vec<CycNum>>>,
}

impl fmt::Debug for MSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MSpace")
            .field("group", &self.group.name())
            .field("pairs", &self.pairs.len())
            .finish()
    }
}

/// The shared space of a named quotient model (`S1`..`S5`, `S2xS2`,
/// `S3xS2`), built once per process.
pub fn model_space(name: &str) -> Result<Arc<MSpace>> {
    static CACHE: OnceLock<Mutex<HashMap<String, Arc<MSpace>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(m) = cache.lock().expect("cache lock").get(name) {
        return Ok(m.clone());
    }
    let m = MSpace::new(&quotient_model(name)?)?;
    Ok(cache
        .lock()
        .expect("cache lock")
        .entry(name.to_string())
        .or_insert(m)
        .clone())
}

impl MSpace {
    pub fn new(group: &Arc<Group>) -> Result<Arc<MSpace>> {
        let mut classes = Vec::with_capacity(group.num_classes());
        let mut pairs = Vec::new();
        let mut offsets = Vec::new();
        for (c, class) in group.classes().iter().enumerate() {
            let z = if group.centralizer_indices(class.rep).len() == group.order() {
                group.clone()
            } else {
                let name = format!("Z({},{})", group.name(), class.label);
                group
                    .centralizer(class.rep, &name)?
                    .with_key(group.element(class.rep).clone())
            };
            let table = character_table(&z)?;
            let local_class = group
                .elements()
                .iter()
                .map(|p| z.index_of(p).map(|i| z.class_of(i)))
                .collect();
            offsets.push(pairs.len());
            pairs.extend((0..table.len()).map(|irr| MPair { class: c, irr }));
            classes.push(MClass {
                label: class.label.clone(),
                rep: class.rep,
                centralizer: z,
                table,
                local_class,
            });
        }
        Ok(Arc::new(MSpace {
            group: group.clone(),
            classes,
            pairs,
            offsets,
            pairing: OnceLock::new(),
        }))
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn classes(&self) -> &[MClass] {
        &self.classes
    }

    /// All pairs, ordered by class and then by irreducible.
    pub fn pairs(&self) -> &[MPair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn index(&self, p: MPair) -> usize {
        self.offsets[p.class] + p.irr
    }

    pub fn centralizer(&self, class: usize) -> &Arc<Group> {
        &self.classes[class].centralizer
    }

    pub fn table(&self, class: usize) -> &Arc<CharTable> {
        &self.classes[class].table
    }

    /// The pair with the given class and irreducible labels.
    pub fn find(&self, class: &str, irr: &str) -> Result<MPair> {
        let c = self.group.class_by_label(class)?;
        let i = self.classes[c].table.index_of(irr)?;
        Ok(MPair { class: c, irr: i })
    }

    /// `(class label, irreducible label)`.
    pub fn labels(&self, p: MPair) -> (&str, &str) {
        let c = &self.classes[p.class];
        (&c.label, c.table.label(p.irr))
    }

    pub fn pair_label(&self, p: MPair) -> String {
        let (x, s) = self.labels(p);
        format!("({x},{s})")
    }

    /// `(1,1)`.
    pub fn unit(&self) -> MPair {
        MPair { class: 0, irr: 0 }
    }

    /// `(x, rho) = sum_sigma (sigma : rho) (x, sigma)` for a character `rho`
    /// of the centralizer of the representative of `class`.
    pub fn expand_pair(self: &Arc<Self>, class: usize, rho: &ClassFunction) -> Result<MVector> {
        let m = self.classes[class].table.decompose(rho)?;
        let mut v = MVector::zero(self);
        for (irr, k) in m.into_iter().enumerate() {
            v.set(MPair { class, irr }, CycNum::from_int(k));
        }
        Ok(v)
    }

    /// Matrix of the pairing, indexed by positions in `pairs()`.
    pub fn pairing_matrix(&self) -> &Vec<Vec<CycNum>> {
        self.pairing.get_or_init(|| self.compute_pairing())
    }

    pub fn pairing(&self, a: MPair, b: MPair) -> &CycNum {
        &self.pairing_matrix()[self.index(a)][self.index(b)]
    }

    /// `{(x,s),(y,t)} = 1/(|Z(x)||Z(y)|) sum_{g : x (g y g^-1) = (g y g^-1) x}
    /// s(g y g^-1) conj(t(g^-1 x g))`.
    fn compute_pairing(&self) -> Vec<Vec<CycNum>> {
        let g = &self.group;
        let n = self.pairs.len();
        let mut out = vec![vec![CycNum::zero(); n]; n];
        for (cx, mx) in self.classes.iter().enumerate() {
            for (cy, my) in self.classes.iter().enumerate() {
                let mut tally: HashMap<(usize, usize), i64> = HashMap::new();
                for gi in 0..g.order() {
                    let y = g.conj(gi, my.rep);
                    let Some(a) = mx.local_class[y] else { continue };
                    let x = g.conj(g.inv(gi), mx.rep);
                    let b = my.local_class[x].expect("commuting elements centralize each other");
                    *tally.entry((a, b)).or_default() += 1;
                }
                let den = (mx.centralizer.order() * my.centralizer.order()) as i64;
                let scale = BigRational::new(1.into(), den.into());
                for (s, sigma) in mx.table.irreducibles().iter().enumerate() {
                    for (t, tau) in my.table.irreducibles().iter().enumerate() {
                        let mut acc = CycNum::zero();
                        for (&(a, b), &k) in &tally {
                            acc += &(sigma.value(a) * &tau.value(b).conj()).scale_int(k);
                        }
                        out[self.offsets[cx] + s][self.offsets[cy] + t] = acc.scale(&scale);
                    }
                }
            }
        }
        out
    }

    /// The Fourier transform `(x,s) -> sum_(y,t) {(x,s),(y,t)} (y,t)`.
    pub fn fourier(self: &Arc<Self>, v: &MVector) -> Result<MVector> {
        v.check_space(self)?;
        let m = self.pairing_matrix();
        let mut out = vec![CycNum::zero(); self.len()];
        for (a, c) in v.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (b, o) in out.iter_mut().enumerate() {
                if !m[a][b].is_zero() {
                    *o += &(c * &m[a][b]);
                }
            }
        }
        Ok(MVector::from_coeffs(self, out))
    }

    /// Every coefficient of `v` and of its transform is real and nonnegative.
    pub fn is_bipositive(self: &Arc<Self>, v: &MVector) -> Result<bool> {
        Ok(v.is_nonnegative()? && self.fourier(v)?.is_nonnegative()?)
    }

    /// Natural coefficients, `(1,1)` with coefficient 1, and fixed by the
    /// transform.
    pub fn is_lagrangian(self: &Arc<Self>, v: &MVector) -> Result<bool> {
        Ok(v.coeffs().iter().all(CycNum::is_natural)
            && v.get(self.unit()).is_one()
            && &self.fourier(v)? == v)
    }

    /// The transform of `(1,1)` in closed form: `sum (dim s / |Z(x)|) (x,s)`.
    pub fn fourier_of_unit(self: &Arc<Self>) -> MVector {
        let mut v = MVector::zero(self);
        for &p in &self.pairs {
            let mc = &self.classes[p.class];
            let d = mc.table.irr(p.irr).degree().clone();
            let r = BigRational::new(1.into(), (mc.centralizer.order() as i64).into());
            v.set(p, d.scale(&r));
        }
        v
    }

    pub(crate) fn mismatch(&self, other: &MSpace) -> Error {
        Error::GroupMismatch(
            self.group.name().to_string(),
            other.group.name().to_string(),
        )
    }
}

#[cfg(test)]
mod tests;
