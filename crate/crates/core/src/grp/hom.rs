use std::collections::VecDeque;
use std::sync::Arc;

use super::group::Group;
use super::perm::Perm;
use crate::error::{Error, Result};

/// A homomorphism between two concrete groups, stored as the image index of
/// every source element.
#[derive(Clone, Debug)]
pub struct GroupHom {
    source: Arc<Group>,
    target: Arc<Group>,
    images: Vec<usize>,
}

impl GroupHom {
    /// Builds the map and checks that it is multiplicative.
    pub fn new(source: Arc<Group>, target: Arc<Group>, images: Vec<usize>) -> Result<Self> {
        let h = GroupHom {
            source,
            target,
            images,
        };
        if h.images.len() != h.source.order() || !h.is_homomorphism() {
            return Err(Error::Construction(format!(
                "map {} -> {} is not a homomorphism",
                h.source.name(),
                h.target.name()
            )));
        }
        Ok(h)
    }

    pub fn identity(g: &Arc<Group>) -> Self {
        GroupHom {
            source: g.clone(),
            target: g.clone(),
            images: (0..g.order()).collect(),
        }
    }

    /// Extends an assignment on generators; `None` if it does not define a
    /// homomorphism.
    pub fn extend(
        source: &Arc<Group>,
        target: &Arc<Group>,
        gens: &[(usize, usize)],
    ) -> Option<Self> {
        let n = source.order();
        let mut images = vec![usize::MAX; n];
        images[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &(g, tg) in gens {
                let y = source.mul(g, x);
                let ty = target.mul(tg, images[x]);
                if images[y] == usize::MAX {
                    images[y] = ty;
                    queue.push_back(y);
                } else if images[y] != ty {
                    return None;
                }
            }
        }
        if images.contains(&usize::MAX) {
            return None;
        }
        let h = GroupHom {
            source: source.clone(),
            target: target.clone(),
            images,
        };
        h.is_homomorphism().then_some(h)
    }

    fn is_homomorphism(&self) -> bool {
        let n = self.source.order();
        (0..n).all(|a| {
            (0..n).all(|b| {
                self.images[self.source.mul(a, b)]
                    == self.target.mul(self.images[a], self.images[b])
            })
        })
    }

    pub fn source(&self) -> &Arc<Group> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Group> {
        &self.target
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn apply_perm(&self, p: &Perm) -> Result<Perm> {
        let i = self.source.member(p)?;
        Ok(self.target.element(self.images[i]).clone())
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GroupHom) -> Result<GroupHom> {
        if !Arc::ptr_eq(&self.target, &other.source) && !self.target.same_elements(&other.source) {
            return Err(Error::GroupMismatch(
                self.target.name().into(),
                other.source.name().into(),
            ));
        }
        let images = self
            .images
            .iter()
            .map(|&y| {
                other
                    .source
                    .member(self.target.element(y))
                    .map(|i| other.images[i])
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupHom {
            source: self.source.clone(),
            target: other.target.clone(),
            images,
        })
    }

    pub fn kernel(&self) -> Vec<usize> {
        (0..self.source.order())
            .filter(|&x| self.images[x] == 0)
            .collect()
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.order()];
        for &y in &self.images {
            hit[y] = true;
        }
        hit.into_iter().all(|b| b)
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().len() == 1
    }
}
