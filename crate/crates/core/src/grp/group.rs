use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use super::perm::Perm;
use crate::error::{Error, Result};

/// A conjugacy class: a label, the index of its representative and its
/// members (sorted element indices).
#[derive(Clone, Debug)]
pub struct Class {
    pub label: String,
    pub rep: usize,
    pub elements: Vec<usize>,
}

impl Class {
    pub fn size(&self) -> usize {
        self.elements.len()
    }
}

/// A finite permutation group stored exhaustively, with a multiplication
/// table and its conjugacy classes.
///
/// Elements are sorted by image array, so index 0 is the identity.
pub struct Group {
    name: String,
    degree: usize,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    mul: Vec<u16>,
    inv: Vec<u16>,
    classes: Vec<Class>,
    class_of: Vec<usize>,
    key: Option<Perm>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group({}, order {})", self.name, self.order())
    }
}

/// Named class representatives used to order and label classes.
pub type NamedReps = [(String, Perm)];

impl Group {
    /// Closure of `gens` under multiplication.
    pub fn generated(
        name: &str,
        degree: usize,
        gens: &[Perm],
        named: &NamedReps,
    ) -> Result<Arc<Group>> {
        let id = Perm::identity(degree);
        let mut seen: HashMap<Perm, ()> = HashMap::new();
        let mut queue = VecDeque::from([id.clone()]);
        seen.insert(id, ());
        while let Some(p) = queue.pop_front() {
            for g in gens {
                if g.degree() != degree {
                    return Err(Error::Construction(format!(
                        "generator {g} has wrong degree"
                    )));
                }
                let q = g.compose(&p);
                if !seen.contains_key(&q) {
                    seen.insert(q.clone(), ());
                    queue.push_back(q);
                }
            }
        }
        Self::build(name, degree, seen.into_keys().collect(), named)
    }

    /// A group from an explicit element list, which must be closed.
    pub fn from_elements(
        name: &str,
        degree: usize,
        elements: Vec<Perm>,
        named: &NamedReps,
    ) -> Result<Arc<Group>> {
        let g = Self::build(name, degree, elements, named)?;
        Ok(g)
    }

    fn build(
        name: &str,
        degree: usize,
        mut elements: Vec<Perm>,
        named: &NamedReps,
    ) -> Result<Arc<Group>> {
        elements.sort();
        elements.dedup();
        let n = elements.len();
        if n == 0 || !elements[0].is_identity() || n > u16::MAX as usize {
            return Err(Error::Construction(format!("{name}: no identity")));
        }
        let index: HashMap<Perm, usize> = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let mut mul = vec![0u16; n * n];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                let c = index.get(&a.compose(b)).ok_or_else(|| {
                    Error::Construction(format!("{name}: not closed under products"))
                })?;
                mul[i * n + j] = *c as u16;
            }
        }
        let mut inv = vec![0u16; n];
        for i in 0..n {
            let j = (0..n)
                .find(|&j| mul[i * n + j] == 0)
                .expect("inverse exists in a finite closed set");
            inv[i] = j as u16;
        }
        let mut g = Group {
            name: name.to_string(),
            degree,
            elements,
            index,
            mul,
            inv,
            classes: Vec::new(),
            class_of: vec![usize::MAX; n],
            key: None,
        };
        g.compute_classes(named)?;
        Ok(Arc::new(g))
    }

    fn compute_classes(&mut self, named: &NamedReps) -> Result<()> {
        let n = self.order();
        let mut raw: Vec<Vec<usize>> = Vec::new();
        let mut class_of = vec![usize::MAX; n];
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let mut members: Vec<usize> = (0..n).map(|g| self.conj(g, x)).collect();
            members.sort_unstable();
            members.dedup();
            for &m in &members {
                class_of[m] = raw.len();
            }
            raw.push(members);
        }
        let mut order: Vec<(usize, String, usize)> = Vec::new();
        let mut taken = vec![false; raw.len()];
        for (label, rep) in named {
            let idx = self.index_of(rep).ok_or_else(|| Error::NotAMember {
                group: self.name.clone(),
                elem: rep.to_string(),
            })?;
            let c = class_of[idx];
            if taken[c] {
                return Err(Error::Construction(format!(
                    "{}: {label} repeats a class",
                    self.name
                )));
            }
            taken[c] = true;
            order.push((c, label.clone(), idx));
        }
        let mut rest: Vec<usize> = (0..raw.len()).filter(|&c| !taken[c]).collect();
        rest.sort_by_key(|&c| (self.elements[raw[c][0]].order(), raw[c][0]));
        for c in rest {
            let rep = raw[c][0];
            order.push((c, self.elements[rep].to_string(), rep));
        }
        let mut classes = Vec::with_capacity(raw.len());
        for (new, (old, label, rep)) in order.into_iter().enumerate() {
            for &m in &raw[old] {
                self.class_of[m] = new;
            }
            classes.push(Class {
                label,
                rep,
                elements: std::mem::take(&mut raw[old]),
            });
        }
        self.classes = classes;
        Ok(())
    }

    /// Same group with a distinguished element attached (used to label
    /// characters of cyclic groups by their value on a generator).
    pub fn with_key(self: &Arc<Self>, key: Perm) -> Arc<Group> {
        let mut g = Group {
            name: self.name.clone(),
            degree: self.degree,
            elements: self.elements.clone(),
            index: self.index.clone(),
            mul: self.mul.clone(),
            inv: self.inv.clone(),
            classes: self.classes.clone(),
            class_of: self.class_of.clone(),
            key: None,
        };
        g.key = Some(key);
        Arc::new(g)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn key(&self) -> Option<&Perm> {
        self.key.as_ref()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index.contains_key(p)
    }

    pub fn member(&self, p: &Perm) -> Result<usize> {
        self.index_of(p).ok_or_else(|| Error::NotAMember {
            group: self.name.clone(),
            elem: p.to_string(),
        })
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order() + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `g * x * g^-1`.
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn pow(&self, x: usize, e: usize) -> usize {
        (0..e).fold(0, |acc, _| self.mul(acc, x))
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn classes(&self) -> &[Class] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn class_of_perm(&self, p: &Perm) -> Result<usize> {
        Ok(self.class_of(self.member(p)?))
    }

    pub fn class_rep(&self, c: usize) -> &Perm {
        &self.elements[self.classes[c].rep]
    }

    pub fn class_by_label(&self, label: &str) -> Result<usize> {
        self.classes
            .iter()
            .position(|c| c.label == label)
            .ok_or_else(|| Error::UnknownClass {
                group: self.name.clone(),
                label: label.to_string(),
            })
    }

    /// Some `g` with `g x g^-1 = y`, if `x` and `y` are conjugate.
    pub fn conjugator(&self, x: usize, y: usize) -> Option<usize> {
        (0..self.order()).find(|&g| self.conj(g, x) == y)
    }

    pub fn centralizer_indices(&self, x: usize) -> Vec<usize> {
        (0..self.order()).filter(|&g| self.commute(g, x)).collect()
    }

    /// `Z(x)` as a group of its own, named `name`.
    pub fn centralizer(&self, x: usize, name: &str) -> Result<Arc<Group>> {
        let elems = self
            .centralizer_indices(x)
            .into_iter()
            .map(|i| self.elements[i].clone())
            .collect();
        Group::from_elements(name, self.degree, elems, &[])
    }

    /// Subgroup generated by the given elements, built as a group of its own.
    pub fn subgroup(&self, name: &str, gens: &[Perm]) -> Result<Arc<Group>> {
        for g in gens {
            self.member(g)?;
        }
        Group::generated(name, self.degree, gens, &[])
    }

    /// True when every element of `other` lies in `self`.
    pub fn contains_group(&self, other: &Group) -> bool {
        other.degree == self.degree && other.elements.iter().all(|p| self.contains(p))
    }

    pub fn same_elements(&self, other: &Group) -> bool {
        self.order() == other.order() && self.contains_group(other)
    }

    pub fn is_abelian(&self) -> bool {
        self.classes.len() == self.order()
    }

    pub fn exponent(&self) -> usize {
        (0..self.order()).fold(1, |acc, x| num_integer::lcm(acc, self.element_order(x)))
    }
}

/// True when `h` is normal in `hp`; errors unless `h` is contained in `hp`.
pub fn is_normal(h: &Group, hp: &Group) -> Result<bool> {
    if !hp.contains_group(h) {
        return Err(Error::NotContained {
            sub: h.name().to_string(),
            sup: hp.name().to_string(),
        });
    }
    Ok(hp
        .elements()
        .iter()
        .all(|g| h.elements().iter().all(|x| h.contains(&x.conjugate_by(g)))))
}
