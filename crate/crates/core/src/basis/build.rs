use std::collections::BTreeMap;
use std::sync::Arc;

use serde_json::{json, Value};

use super::primitive::{delta_of, piece_of, primitives, shriek_tag, Tag};
use super::stage::{resolve, xbar_pairs, Stage, XBarPair};
use crate::error::{Error, Result};
use crate::exact::CycNum;
use crate::linalg::{coordinates, rank, Matrix};
use crate::mspace::{model_space, MPair, MSpace, MVector};

/// One element `sigma_{H,H'}(L)` of the new basis.
#[derive(Clone, Debug)]
pub struct BasisElement {
    pub pair: XBarPair,
    pub quotient: String,
    pub tag: Tag,
    pub vector: MVector,
    /// The pair `epsilon(L)`.
    pub leading: MPair,
    pub piece: String,
    pub depth: u32,
    pub sign: i64,
}

/// The new basis of `C[M(G)]` with its order, involution and Fourier matrix.
#[derive(Debug)]
pub struct NewBasis {
    space: Arc<MSpace>,
    elements: Vec<BasisElement>,
    by_leading: Vec<usize>,
    leq: Vec<Vec<bool>>,
    fourier: Matrix,
    shriek: Vec<usize>,
}

/// The elements of a Lagrangian census: the piece of `1`, the Lagrangian
/// elements, and the images `I_G` of the `(1,E)^!`.
#[derive(Clone, Debug)]
pub struct Census {
    pub piece_one: Vec<usize>,
    pub lagrangian: Vec<usize>,
    pub images: Vec<MPair>,
}

/// Builds `B_G` for `G` one of `S1`, .., `S5`.
pub fn build_basis(gamma: &str) -> Result<NewBasis> {
    let space = model_space(gamma)?;
    let g = space.group().clone();
    let mut raw = Vec::new();
    for pair in xbar_pairs(gamma)? {
        let (h, hp) = resolve(&g, &pair)?;
        let stage = Stage::new(&space, &h, &hp)?;
        let q = stage.quotient().clone();
        let qname = q.group().name().to_string();
        for (tag, v) in primitives(&q)? {
            raw.push((pair.clone(), qname.clone(), tag, stage.sigma_map(&v)?));
        }
    }
    let n = space.len();
    if raw.len() != n {
        return Err(Error::Construction(format!(
            "{} basis elements for {n} pairs",
            raw.len()
        )));
    }
    let rows: Vec<Vec<CycNum>> = raw.iter().map(|r| r.3.coeffs().to_vec()).collect();
    let r = rank(&rows)?;
    if r != n {
        return Err(Error::Construction(format!("rank {r} < {n}")));
    }
    let leading = unique_matching(&rows)?;
    for (i, &l) in leading.iter().enumerate() {
        if !rows[i][l].is_one() {
            return Err(Error::Matching(format!(
                "leading coefficient {} is not 1",
                rows[i][l]
            )));
        }
    }
    let mut by_leading = vec![0; n];
    for (i, &l) in leading.iter().enumerate() {
        by_leading[l] = i;
    }
    let leq = order_closure(&rows, &leading)?;

    let mut shriek = Vec::with_capacity(n);
    for (pair, q, tag, _) in &raw {
        let t = shriek_tag(q, *tag)?;
        let j = raw
            .iter()
            .position(|(p2, _, t2, _)| p2 == pair && *t2 == t)
            .ok_or_else(|| Error::Construction(format!("no image of {tag} under !")))?;
        shriek.push(j);
    }

    let targets: Vec<Vec<CycNum>> = raw
        .iter()
        .map(|r| Ok(space.fourier(&r.3)?.coeffs().to_vec()))
        .collect::<Result<_>>()?;
    let fourier = coordinates(&rows, &targets)?;

    let mut elements = Vec::with_capacity(n);
    for (i, (pair, quotient, tag, vector)) in raw.into_iter().enumerate() {
        let d = &fourier[i][i];
        let sign = if d.is_one() {
            1
        } else if *d == CycNum::from_int(-1) {
            -1
        } else {
            return Err(Error::Triangularity(format!(
                "diagonal entry {d} is not a sign"
            )));
        };
        let depth = delta_of(&quotient, tag)?;
        elements.push(BasisElement {
            pair,
            leading: space.pairs()[leading[i]],
            piece: piece_of(tag),
            depth,
            sign,
            quotient,
            tag,
            vector,
        });
    }
    Ok(NewBasis {
        space,
        elements,
        by_leading,
        leq,
        fourier,
        shriek,
    })
}

/// The perfect matching of rows to columns along nonzero entries, with an
/// error unless it exists and is unique.
fn unique_matching(rows: &[Vec<CycNum>]) -> Result<Vec<usize>> {
    let n = rows.len();
    let adj: Vec<Vec<usize>> = rows
        .iter()
        .map(|r| (0..n).filter(|&c| !r[c].is_zero()).collect())
        .collect();
    let mut col_match = vec![usize::MAX; n];
    fn augment(u: usize, adj: &[Vec<usize>], seen: &mut [bool], col_match: &mut [usize]) -> bool {
        for &c in &adj[u] {
            if !seen[c] {
                seen[c] = true;
                if col_match[c] == usize::MAX || augment(col_match[c], adj, seen, col_match) {
                    col_match[c] = u;
                    return true;
                }
            }
        }
        false
    }
    for u in 0..n {
        if !augment(u, &adj, &mut vec![false; n], &mut col_match) {
            return Err(Error::Matching("no perfect matching".into()));
        }
    }
    let mut row_match = vec![0; n];
    for (c, &u) in col_match.iter().enumerate() {
        row_match[u] = c;
    }
    // the matching is unique iff there is no alternating cycle, i.e. the
    // graph u -> col_match[c] for c in support(u) is acyclic
    let succ: Vec<Vec<usize>> = adj
        .iter()
        .enumerate()
        .map(|(u, cs)| {
            cs.iter()
                .map(|&c| col_match[c])
                .filter(|&v| v != u)
                .collect()
        })
        .collect();
    let mut state = vec![0u8; n];
    fn cyclic(u: usize, succ: &[Vec<usize>], state: &mut [u8]) -> bool {
        state[u] = 1;
        for &v in &succ[u] {
            if state[v] == 1 || (state[v] == 0 && cyclic(v, succ, state)) {
                return true;
            }
        }
        state[u] = 2;
        false
    }
    for u in 0..n {
        if state[u] == 0 && cyclic(u, &succ, &mut state) {
            return Err(Error::Matching("the matching is not unique".into()));
        }
    }
    Ok(row_match)
}

/// `leq[a][b]` iff `a <= b`: the transitive closure of "`a` occurs in the
/// basis element led by `b`".
fn order_closure(rows: &[Vec<CycNum>], leading: &[usize]) -> Result<Vec<Vec<bool>>> {
    let n = rows.len();
    let mut leq = vec![vec![false; n]; n];
    for (i, row) in rows.iter().enumerate() {
        for (a, c) in row.iter().enumerate() {
            if !c.is_zero() {
                leq[a][leading[i]] = true;
            }
        }
    }
    for k in 0..n {
        for a in 0..n {
            if leq[a][k] {
                for b in 0..n {
                    if leq[k][b] {
                        leq[a][b] = true;
                    }
                }
            }
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            if leq[a][b] && leq[b][a] {
                return Err(Error::NotPartialOrder(format!(
                    "pairs {a} and {b} lie below each other"
                )));
            }
        }
    }
    Ok(leq)
}

impl NewBasis {
    pub fn space(&self) -> &Arc<MSpace> {
        &self.space
    }

    pub fn elements(&self) -> &[BasisElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Index of the element `h(p)` with leading pair `p`.
    pub fn index_of(&self, p: MPair) -> usize {
        self.by_leading[self.space.index(p)]
    }

    /// The element `h(p)`.
    pub fn hat(&self, p: MPair) -> &BasisElement {
        &self.elements[self.index_of(p)]
    }

    /// `h(x,s)` by labels.
    pub fn hat_by_label(&self, class: &str, irr: &str) -> Result<&BasisElement> {
        Ok(self.hat(self.space.find(class, irr)?))
    }

    pub fn leq(&self, a: MPair, b: MPair) -> bool {
        self.leq[self.space.index(a)][self.space.index(b)]
    }

    pub fn shriek(&self, i: usize) -> usize {
        self.shriek[i]
    }

    /// The involution `!` read on leading pairs.
    pub fn shriek_pair(&self, p: MPair) -> MPair {
        self.elements[self.shriek[self.index_of(p)]].leading
    }

    /// Row `i` holds the coordinates of `A(L_i)` in the new basis.
    pub fn fourier_matrix(&self) -> &Matrix {
        &self.fourier
    }

    /// Entries `(L, L')` of the Fourier matrix with `L != L'`, a nonzero
    /// coefficient and `delta(L') >= delta(L)`.
    pub fn triangularity_violations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, row) in self.fourier.iter().enumerate() {
            for (k, c) in row.iter().enumerate() {
                if k != i && !c.is_zero() && self.elements[k].depth >= self.elements[i].depth {
                    out.push((i, k));
                }
            }
        }
        out
    }

    /// Checks that `A(L)` is `sg(L) L` plus terms of smaller depth.
    pub fn check_triangular(&self) -> Result<()> {
        match self.triangularity_violations().first() {
            None => Ok(()),
            Some(&(i, k)) => Err(Error::Triangularity(format!(
                "A({}) involves {} of depth {} >= {}",
                self.space.pair_label(self.elements[i].leading),
                self.space.pair_label(self.elements[k].leading),
                self.elements[k].depth,
                self.elements[i].depth
            ))),
        }
    }

    /// Piece labels in class order, each with its element indices.
    pub fn pieces(&self) -> Vec<(String, Vec<usize>)> {
        let g = self.space.group();
        let mut map: BTreeMap<usize, (String, Vec<usize>)> = BTreeMap::new();
        for (i, e) in self.elements.iter().enumerate() {
            let c = g.class_by_label(&e.piece).unwrap_or(usize::MAX);
            map.entry(c)
                .or_insert_with(|| (e.piece.clone(), Vec::new()))
                .1
                .push(i);
        }
        map.into_values().collect()
    }

    /// The unique `<=`-minimal element of a piece.
    pub fn piece_minimum(&self, piece: &str) -> Result<&BasisElement> {
        let (_, members) = self
            .pieces()
            .into_iter()
            .find(|(l, _)| l == piece)
            .ok_or_else(|| Error::UnknownClass {
                group: self.space.group().name().into(),
                label: piece.into(),
            })?;
        let idx = |i: usize| self.space.index(self.elements[i].leading);
        members
            .iter()
            .copied()
            .find(|&m| members.iter().all(|&o| self.leq[idx(m)][idx(o)]))
            .map(|m| &self.elements[m])
            .ok_or_else(|| Error::NotPartialOrder(format!("piece {piece} has no minimum")))
    }

    /// `sum sg(L)`, checked against the trace of the Fourier matrix on `M(G)`.
    pub fn tau(&self) -> Result<i64> {
        let sum: i64 = self.elements.iter().map(|e| e.sign).sum();
        let trace: CycNum = self
            .space
            .pairs()
            .iter()
            .map(|&p| self.space.pairing(p, p).clone())
            .sum();
        if trace != CycNum::from_int(sum) {
            return Err(Error::Verification(format!(
                "sign sum {sum} differs from trace {trace}"
            )));
        }
        Ok(sum)
    }

    /// The piece of `1`, the Lagrangian elements and the images of the
    /// `(1,E)^!`, with `!` checked to map the first set onto the second.
    pub fn lagrangian_census(&self) -> Result<Census> {
        let piece_one: Vec<usize> = (0..self.len())
            .filter(|&i| self.elements[i].piece == "1")
            .collect();
        let mut lagrangian = Vec::new();
        for (i, e) in self.elements.iter().enumerate() {
            if self.space.is_lagrangian(&e.vector)? {
                lagrangian.push(i);
            }
        }
        let mut image: Vec<usize> = piece_one.iter().map(|&i| self.shriek[i]).collect();
        image.sort_unstable();
        if image != lagrangian {
            return Err(Error::Verification(
                "! does not map the piece of 1 onto the Lagrangian elements".into(),
            ));
        }
        let unit_class = self.space.unit().class;
        let images = (0..self.space.table(unit_class).len())
            .map(|irr| {
                self.shriek_pair(MPair {
                    class: unit_class,
                    irr,
                })
            })
            .collect();
        Ok(Census {
            piece_one,
            lagrangian,
            images,
        })
    }

    pub fn to_json(&self) -> Value {
        let elements: Vec<Value> = self
            .elements
            .iter()
            .map(|e| {
                json!({
                    "pair": e.pair.to_string(),
                    "quotient": e.quotient,
                    "primitive": e.tag.to_string(),
                    "leading": self.space.pair_label(e.leading),
                    "piece": e.piece,
                    "delta": e.depth,
                    "sign": e.sign,
                    "vector": e.vector.to_json(),
                })
            })
            .collect();
        json!({ "group": self.space.group().name(), "elements": elements })
    }
}
