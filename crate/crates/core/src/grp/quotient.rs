use std::sync::Arc;

use super::group::{is_normal, Group};
use super::hom::GroupHom;
use super::perm::Perm;
use super::standard::quotient_model;
use crate::error::{Error, Result};

/// `hp / h` realized as the permutation action of `hp` on the left cosets of
/// `h`, together with the projection. When `h` is trivial the quotient is
/// `hp` itself with the identity map.
pub fn quotient(hp: &Arc<Group>, h: &Group) -> Result<(Arc<Group>, GroupHom)> {
    if !is_normal(h, hp)? {
        return Err(Error::NotNormal {
            sub: h.name().to_string(),
            sup: hp.name().to_string(),
        });
    }
    if h.order() == 1 {
        return Ok((hp.clone(), GroupHom::identity(hp)));
    }
    let n = hp.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    let h_idx: Vec<usize> = h
        .elements()
        .iter()
        .map(|p| hp.member(p))
        .collect::<Result<_>>()?;
    for g in 0..n {
        if coset_of[g] != usize::MAX {
            continue;
        }
        for &k in &h_idx {
            coset_of[hp.mul(g, k)] = reps.len();
        }
        reps.push(g);
    }
    let index = reps.len();
    if index > 255 {
        return Err(Error::Unsupported(format!("quotient of index {index}")));
    }
    let action = |g: usize| -> Perm {
        let img = reps.iter().map(|&r| coset_of[hp.mul(g, r)] as u8).collect();
        Perm::from_images(img).expect("coset action is a permutation")
    };
    let name = format!("{}/{}", hp.name(), h.name());
    let perms: Vec<Perm> = (0..n).map(action).collect();
    let q = Group::from_elements(&name, index, perms.clone(), &[])?;
    let images = perms
        .iter()
        .map(|p| q.member(p))
        .collect::<Result<Vec<_>>>()?;
    let proj = GroupHom::new(hp.clone(), q.clone(), images)?;
    Ok((q, proj))
}

/// A small generating set: greedily add the element of largest order that
/// is not yet generated.
fn generators(g: &Group) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    let mut inside = vec![false; g.order()];
    inside[0] = true;
    let mut by_order: Vec<usize> = (0..g.order()).collect();
    by_order.sort_by_key(|&x| (std::cmp::Reverse(g.element_order(x)), x));
    for x in by_order {
        if inside[x] {
            continue;
        }
        gens.push(x);
        let mut members: Vec<usize> = (0..g.order()).filter(|&y| inside[y]).collect();
        let mut i = 0;
        while i < members.len() {
            for &s in &gens {
                let y = g.mul(s, members[i]);
                if !inside[y] {
                    inside[y] = true;
                    members.push(y);
                }
            }
            i += 1;
        }
    }
    gens
}

/// An isomorphism `q -> t` found by searching images of a generating set,
/// preferring the identity when both have the same elements.
pub fn find_isomorphism(q: &Arc<Group>, t: &Arc<Group>) -> Option<GroupHom> {
    if q.order() != t.order() {
        return None;
    }
    if q.degree() == t.degree() && q.same_elements(t) {
        let images = q
            .elements()
            .iter()
            .map(|p| t.index_of(p).expect("same elements"))
            .collect();
        return GroupHom::new(q.clone(), t.clone(), images).ok();
    }
    let gens = generators(q);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| {
            (0..t.order())
                .filter(|&y| t.element_order(y) == q.element_order(s))
                .collect()
        })
        .collect();
    let mut choice = vec![0usize; gens.len()];
    loop {
        let assignment: Vec<(usize, usize)> = gens
            .iter()
            .zip(&choice)
            .zip(&candidates)
            .map(|((&s, &c), cands)| (s, cands[c]))
            .collect();
        if let Some(h) = GroupHom::extend(q, t, &assignment) {
            if h.is_injective() {
                return Some(h);
            }
        }
        // odometer increment
        let mut k = 0;
        loop {
            if k == choice.len() {
                return None;
            }
            choice[k] += 1;
            if choice[k] < candidates[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// Names `q` as one of the quotient types and returns an isomorphism onto
/// its concrete model.
pub fn identify_with_standard(q: &Arc<Group>) -> Result<(String, GroupHom)> {
    let name = match q.order() {
        1 => "S1",
        2 => "S2",
        4 if q.exponent() == 2 => "S2xS2",
        6 if !q.is_abelian() => "S3",
        12 if q.num_classes() == 6 && q.exponent() == 6 => "S3xS2",
        24 if q.num_classes() == 5 => "S4",
        120 if q.num_classes() == 7 => "S5",
        n => return Err(Error::UnrecognizedQuotient(n)),
    };
    let t = quotient_model(name)?;
    let iso = find_isomorphism(q, &t).ok_or(Error::UnrecognizedQuotient(q.order()))?;
    Ok((name.to_string(), iso))
}
