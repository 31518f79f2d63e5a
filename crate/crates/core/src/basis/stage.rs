use std::fmt;
use std::sync::Arc;

use crate::chr::ClassFunction;
use crate::error::{Error, Result};
use crate::grp::{identify_with_standard, quotient, standard_subgroup, Group, GroupHom, Perm};
use crate::mspace::{model_space, MPair, MSpace, MVector};

/// A pair `(H, H')` of named subgroups with `H` normal in `H'`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct XBarPair {
    pub h: String,
    pub hp: String,
}

impl XBarPair {
    pub fn new(h: &str, hp: &str) -> Self {
        XBarPair {
            h: h.to_string(),
            hp: hp.to_string(),
        }
    }
}

impl fmt::Display for XBarPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.h, self.hp)
    }
}

/// The pairs `(H, H')` that index the new basis of `S_n`.
pub fn xbar_pairs(gamma: &str) -> Result<Vec<XBarPair>> {
    let list: &[(&str, &str)] = match gamma {
        "S1" => &[("S1", "S1")],
        "S2" => &[("S1", "S1"), ("S1", "S2"), ("S2", "S2")],
        "S3" => &[
            ("S1", "S1"),
            ("S1", "S2"),
            ("S1", "S3"),
            ("S2", "S2"),
            ("S3", "S3"),
        ],
        "S4" => &[
            ("S1", "S1"),
            ("S1", "S2"),
            ("S1", "S3"),
            ("S1", "S4"),
            ("S1", "S2xS2"),
            ("S2", "S2"),
            ("S2", "S2xS2"),
            ("S2xS2", "S2xS2"),
            ("S2xS2", "D8"),
            ("D8", "D8"),
            ("S3", "S3"),
            ("S4", "S4"),
        ],
        "S5" => &[
            ("S1", "S1"),
            ("S1", "S2"),
            ("S1", "S3"),
            ("S1", "S4"),
            ("S1", "S5"),
            ("S1", "S2xS2"),
            ("S1", "S3xS2"),
            ("S2", "S2"),
            ("S2", "S2xS2"),
            ("S2", "S3xS2"),
            ("S3", "S3"),
            ("S3", "S3xS2"),
            ("S2xS2", "S2xS2"),
            ("S2xS2", "D8"),
            ("S3xS2", "S3xS2"),
            ("S4", "S4"),
            ("S5", "S5"),
            ("D8", "D8"),
        ],
        other => return Err(Error::Unsupported(format!("no pair data for {other}"))),
    };
    Ok(list.iter().map(|(h, hp)| XBarPair::new(h, hp)).collect())
}

/// The subgroups of `gamma` named by a pair. In `(S2, S3xS2)` the normal
/// subgroup is the factor `<(4 5)>`.
pub fn resolve(gamma: &Group, pair: &XBarPair) -> Result<(Arc<Group>, Arc<Group>)> {
    let hp = standard_subgroup(gamma, &pair.hp)?;
    let h = if pair.h == "S2" && pair.hp == "S3xS2" {
        gamma.subgroup("S2", &[Perm::parse(gamma.degree(), "(4 5)")?])?
    } else {
        standard_subgroup(gamma, &pair.h)?
    };
    Ok((h, hp))
}

/// The maps `pi: C[M(Q)] -> C[M(H')]`, `i: C[M(H')] -> C[M(G)]` and their
/// composite for a surjection `H' -> Q` with kernel `H`.
pub struct Stage {
    gamma: Arc<MSpace>,
    hp: Arc<MSpace>,
    quotient: Arc<MSpace>,
    pi: Vec<MVector>,
    inc: Vec<MVector>,
}

impl Stage {
    /// The stage of `(H, H')` inside the group of `gamma`, with the quotient
    /// identified with its standard model.
    pub fn new(gamma: &Arc<MSpace>, h: &Arc<Group>, hp: &Arc<Group>) -> Result<Stage> {
        let (q, proj) = quotient(hp, h)?;
        let (name, iso) = identify_with_standard(&q)?;
        let model = model_space(&name)?;
        let t = model.group();
        let images = (0..hp.order())
            .map(|x| t.member(iso.target().element(iso.apply(proj.apply(x)))))
            .collect::<Result<Vec<_>>>()?;
        let proj = GroupHom::new(hp.clone(), t.clone(), images)?;
        let hp_space = subgroup_space(gamma, hp)?;
        Self::with_projection(gamma, &hp_space, &proj, &model)
    }

    /// A stage for an explicit surjection `proj: H' -> Q` onto the group of
    /// `quotient`.
    pub fn with_projection(
        gamma: &Arc<MSpace>,
        hp: &Arc<MSpace>,
        proj: &GroupHom,
        quotient: &Arc<MSpace>,
    ) -> Result<Stage> {
        if !proj.is_surjective() || !Arc::ptr_eq(proj.target(), quotient.group()) {
            return Err(Error::Construction(
                "projection must be onto the quotient space's group".into(),
            ));
        }
        if !gamma.group().contains_group(hp.group()) {
            return Err(Error::NotContained {
                sub: hp.group().name().into(),
                sup: gamma.group().name().into(),
            });
        }
        let pi = quotient
            .pairs()
            .iter()
            .map(|&p| pi_pair(hp, proj, quotient, p))
            .collect::<Result<_>>()?;
        let inc = hp
            .pairs()
            .iter()
            .map(|&p| i_pair(gamma, hp, p))
            .collect::<Result<_>>()?;
        Ok(Stage {
            gamma: gamma.clone(),
            hp: hp.clone(),
            quotient: quotient.clone(),
            pi,
            inc,
        })
    }

    /// The stage of `(1, H')`, with `H'` as its own quotient.
    pub fn inclusion(gamma: &Arc<MSpace>, hp: &Arc<Group>) -> Result<Stage> {
        let hp_space = subgroup_space(gamma, hp)?;
        let id = GroupHom::identity(hp_space.group());
        Self::with_projection(gamma, &hp_space, &id, &hp_space)
    }

    pub fn quotient(&self) -> &Arc<MSpace> {
        &self.quotient
    }

    pub fn subgroup_space(&self) -> &Arc<MSpace> {
        &self.hp
    }

    pub fn gamma(&self) -> &Arc<MSpace> {
        &self.gamma
    }

    pub fn pi_map(&self, v: &MVector) -> Result<MVector> {
        combine(&self.quotient, &self.hp, &self.pi, v)
    }

    pub fn i_map(&self, v: &MVector) -> Result<MVector> {
        combine(&self.hp, &self.gamma, &self.inc, v)
    }

    pub fn sigma_map(&self, v: &MVector) -> Result<MVector> {
        self.i_map(&self.pi_map(v)?)
    }
}

/// The space of a subgroup, reusing the shared model when the subgroup is
/// one (so `S3xS2` inside `S5` gets its factorwise labels).
pub fn subgroup_space(gamma: &Arc<MSpace>, hp: &Arc<Group>) -> Result<Arc<MSpace>> {
    if hp.same_elements(gamma.group()) {
        return Ok(gamma.clone());
    }
    if let Ok(model) = model_space(hp.name()) {
        if model.group().degree() == hp.degree() && model.group().same_elements(hp) {
            return Ok(model);
        }
    }
    MSpace::new(hp)
}

fn combine(
    from: &Arc<MSpace>,
    to: &Arc<MSpace>,
    images: &[MVector],
    v: &MVector,
) -> Result<MVector> {
    if !Arc::ptr_eq(v.space(), from) {
        return Err(Error::GroupMismatch(
            v.space().group().name().into(),
            from.group().name().into(),
        ));
    }
    let mut out = MVector::zero(to);
    for (c, img) in v.coeffs().iter().zip(images) {
        if !c.is_zero() {
            out = out.add(&img.scale(c))?;
        }
    }
    Ok(out)
}

/// `pi(xbar, s)`: for each class of `H'` over the class of `xbar`, the
/// character `z -> s(t p(z) t^-1)` of the centralizer, expanded.
fn pi_pair(hp: &Arc<MSpace>, proj: &GroupHom, q: &Arc<MSpace>, p: MPair) -> Result<MVector> {
    let qg = q.group();
    let g = hp.group();
    let xbar = q.classes()[p.class].rep;
    let sigma = q.table(p.class).irr(p.irr);
    let mut out = MVector::zero(hp);
    for (c, mc) in hp.classes().iter().enumerate() {
        let px = proj.apply(mc.rep);
        if qg.class_of(px) != p.class {
            continue;
        }
        let t = qg.conjugator(px, xbar).expect("same class");
        let z = hp.centralizer(c);
        let rho = ClassFunction::from_fn(z, |zp| {
            let y = qg.conj(t, proj.apply(g.index_of(zp).expect("centralizer element")));
            sigma
                .value_at(qg.element(y))
                .expect("lands in the quotient centralizer")
                .clone()
        });
        out = out.add(&hp.expand_pair(c, &rho)?)?;
    }
    Ok(out)
}

/// `i(x, s)`: move `x` to its class representative in `G` and induce the
/// transported character up to the full centralizer.
fn i_pair(gamma: &Arc<MSpace>, hp: &Arc<MSpace>, p: MPair) -> Result<MVector> {
    if Arc::ptr_eq(gamma, hp) {
        return Ok(MVector::basis(gamma, p));
    }
    let gg = gamma.group();
    let x = hp.group().element(hp.classes()[p.class].rep);
    let xi = gg.member(x)?;
    let cg = gg.class_of(xi);
    let g = gg
        .element(
            gg.conjugator(xi, gamma.classes()[cg].rep)
                .expect("same class"),
        )
        .clone();
    let z = hp.centralizer(p.class);
    let moved: Vec<Perm> = z.elements().iter().map(|e| e.conjugate_by(&g)).collect();
    let k = Group::from_elements(&format!("{}^g", z.name()), gg.degree(), moved, &[])?;
    let sigma = hp.table(p.class).irr(p.irr).transport(&g, &k)?;
    let ind = sigma.induce(gamma.centralizer(cg))?;
    gamma.expand_pair(cg, &ind)
}
