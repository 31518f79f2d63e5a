use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact::CycNum;
use crate::grp::{Group, Perm};
use crate::mspace::{MSpace, MVector};

/// The space of the cyclic group `C_n` generated by the `n`-cycle.
pub fn cyclic_space(n: usize) -> Result<Arc<MSpace>> {
    let gen: Vec<u8> = (0..n).map(|i| ((i + 1) % n) as u8).collect();
    let gen = Perm::from_images(gen)?;
    let g = Group::generated(&format!("C{n}"), n, std::slice::from_ref(&gen), &[])?.with_key(gen);
    MSpace::new(&g)
}

fn is_trivial(space: &MSpace, class: usize, irr: usize) -> (bool, bool) {
    let x = space.group().element(space.classes()[class].rep);
    let chi = space.table(class).irr(irr);
    (x.is_identity(), chi.values().iter().all(CycNum::is_one))
}

fn check_cyclic(space: &MSpace) -> Result<()> {
    let g = space.group();
    if g.is_abelian() && (0..g.order()).any(|x| g.element_order(x) == g.order()) {
        Ok(())
    } else {
        Err(Error::Unsupported(format!("{} is not cyclic", g.name())))
    }
}

/// `sum (x,s)` over `x != 1`, `s != 1`, plus `(n-1)(1,1)`, in the space of a
/// cyclic group.
pub fn cyclic_s(space: &Arc<MSpace>) -> Result<MVector> {
    check_cyclic(space)?;
    let n = space.group().order() as i64;
    let mut v = MVector::zero(space);
    for &p in space.pairs() {
        match is_trivial(space, p.class, p.irr) {
            (false, false) => v.set(p, CycNum::one()),
            (true, true) => v.set(p, CycNum::from_int(n - 1)),
            _ => {}
        }
    }
    Ok(v)
}

/// `sum (x,s)` over `x^2 != 1`, `s^2 != 1`, plus `2(y,s)` for the elements
/// of order two, plus `2(1,1)`, in the space of a cyclic group of order 4.
pub fn cyclic_s_prime(space: &Arc<MSpace>) -> Result<MVector> {
    check_cyclic(space)?;
    let g = space.group();
    if g.order() != 4 {
        return Err(Error::Unsupported(format!(
            "S' needs a group of order 4, not {}",
            g.order()
        )));
    }
    let mut v = MVector::zero(space);
    for &p in space.pairs() {
        let x = g.element(space.classes()[p.class].rep);
        let chi = space.table(p.class).irr(p.irr);
        let square_one = |c: &CycNum| (c * c).is_one();
        let x2 = x.pow(2).is_identity();
        let s2 = chi.values().iter().all(square_one);
        let c = match (
            x.is_identity(),
            chi.values().iter().all(CycNum::is_one),
            x2,
            s2,
        ) {
            (true, true, _, _) => 2,
            (false, _, true, true) if !chi.values().iter().all(CycNum::is_one) => 2,
            (_, _, false, false) => 1,
            _ => 0,
        };
        if c > 0 {
            v.set(p, CycNum::from_int(c));
        }
    }
    Ok(v)
}
