use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0, .., n-1}` stored as its image array.
///
/// Displayed and parsed in 1-based cycle notation, e.g. `(1 3 2 4)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Box<[u8]>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        assert!(n <= 256);
        Perm((0..n).map(|i| i as u8).collect())
    }

    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::Parse(format!("not a bijection: {images:?}")));
            }
            seen[i] = true;
        }
        Ok(Perm(images.into_boxed_slice()))
    }

    /// Builds a permutation of `{1..n}` from 1-based cycles.
    pub fn from_cycles(n: usize, cycles: &[&[u8]]) -> Result<Self> {
        let mut img: Vec<u8> = (0..n as u8).collect();
        let mut used = vec![false; n];
        for cyc in cycles {
            for (k, &a) in cyc.iter().enumerate() {
                let a = a as usize;
                if a == 0 || a > n || used[a - 1] {
                    return Err(Error::Parse(format!("bad cycle {cyc:?} on {n} points")));
                }
                used[a - 1] = true;
                let b = cyc[(k + 1) % cyc.len()] as usize;
                img[a - 1] = (b - 1) as u8;
            }
        }
        Self::from_images(img)
    }

    /// Parses 1-based cycle notation such as `(1 2 3)(4 5)` or `()`.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad permutation {s:?}"));
        let mut cycles: Vec<Vec<u8>> = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(bad)?;
            let end = body.find(')').ok_or_else(bad)?;
            let cyc = body[..end]
                .split([' ', ','])
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<u8>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            if !cyc.is_empty() {
                cycles.push(cyc);
            }
            rest = body[end + 1..].trim_start();
        }
        let refs: Vec<&[u8]> = cycles.iter().map(|c| c.as_slice()).collect();
        Self::from_cycles(n, &refs)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Image of the 0-based point `i`.
    pub fn image(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    /// `self * other`, acting as `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.degree()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Perm(inv.into_boxed_slice())
    }

    /// `g * self * g^-1`.
    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        g.compose(self).compose(&g.inverse())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    pub fn fixed_points(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .filter(|&(i, &j)| i == j as usize)
            .count()
    }

    /// Nontrivial cycles in 0-based form, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut j = self.image(start);
            while j != start {
                seen[j] = true;
                cyc.push(j);
                j = self.image(j);
            }
            if cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }

    /// Lengths of the nontrivial cycles, sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn order(&self) -> usize {
        self.cycles()
            .iter()
            .fold(1, |acc, c| num_integer::lcm(acc, c.len()))
    }

    pub fn pow(&self, e: usize) -> Perm {
        let mut out = Perm::identity(self.degree());
        for _ in 0..e {
            out = self.compose(&out);
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
