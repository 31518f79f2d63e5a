use super::*;
use crate::grp::{quotient_model, standard_subgroup, symmetric_group};

fn q(n: i64, d: i64) -> CycNum {
    CycNum::frac(n, d)
}

fn int(n: i64) -> CycNum {
    CycNum::from_int(n)
}

fn space(n: usize) -> Arc<MSpace> {
    MSpace::new(&symmetric_group(n).unwrap()).unwrap()
}

fn h3() -> Vec<(&'static str, &'static str, CycNum)> {
    vec![("1", "1", int(1)), ("1", "eps", int(1))]
}

fn h4() -> Vec<(&'static str, &'static str, CycNum)> {
    vec![
        ("g2'", "eps'", int(1)),
        ("g2'", "eps''", int(1)),
        ("1", "lambda^2", int(1)),
        ("1", "sigma", int(1)),
        ("1", "1", int(1)),
    ]
}

fn h5() -> Vec<(&'static str, &'static str, CycNum)> {
    vec![
        ("1", "1", int(1)),
        ("1", "nu", int(1)),
        ("1", "lambda^2", int(2)),
        ("1", "nu'", int(1)),
        ("1", "lambda^4", int(1)),
    ]
}

fn halve(
    terms: Vec<(&'static str, &'static str, CycNum)>,
) -> Vec<(&'static str, &'static str, CycNum)> {
    terms
        .into_iter()
        .map(|(x, s, c)| (x, s, c.scale(&BigRational::new(1.into(), 2.into()))))
        .collect()
}

fn with(
    mut base: Vec<(&'static str, &'static str, CycNum)>,
    extra: &[(&'static str, &'static str, CycNum)],
) -> Vec<(&'static str, &'static str, CycNum)> {
    base.extend(extra.iter().cloned());
    base
}

fn all_spaces() -> Vec<Arc<MSpace>> {
    let s5 = symmetric_group(5).unwrap();
    let mut out: Vec<Arc<MSpace>> = (1..=5).map(space).collect();
    out.push(MSpace::new(&quotient_model("S3xS2").unwrap()).unwrap());
    out.push(MSpace::new(&quotient_model("S2xS2").unwrap()).unwrap());
    for name in ["D8", "C4", "C5", "C6"] {
        out.push(MSpace::new(&standard_subgroup(&s5, name).unwrap()).unwrap());
    }
    out
}

#[test]
fn m_set_sizes() {
    let sizes: Vec<usize> = (1..=5).map(|n| space(n).len()).collect();
    assert_eq!(sizes, vec![1, 4, 8, 21, 39]);
}

#[test]
fn fourier_is_an_involution_and_hermitian() {
    for m in all_spaces() {
        let a = m.pairing_matrix();
        let n = m.len();
        for i in 0..n {
            for j in 0..n {
                assert_eq!(a[i][j], a[j][i].conj(), "{} hermitian", m.group().name());
                let s: CycNum = (0..n).map(|k| &a[i][k] * &a[k][j]).sum();
                assert_eq!(s, int(i64::from(i == j)), "{} involution", m.group().name());
            }
        }
    }
}

#[test]
fn fourier_of_unit_closed_form() {
    for m in all_spaces() {
        let one = MVector::basis(&m, m.unit());
        assert_eq!(
            m.fourier(&one).unwrap(),
            m.fourier_of_unit(),
            "{}",
            m.group().name()
        );
        assert!(m.is_bipositive(&one).unwrap());
    }
}

/// Direct evaluation of the defining sum for a single pair of pairs.
fn pairing_oracle(m: &MSpace, a: MPair, b: MPair) -> CycNum {
    let g = m.group();
    let (ca, cb) = (&m.classes()[a.class], &m.classes()[b.class]);
    let (sigma, tau) = (ca.table.irr(a.irr), cb.table.irr(b.irr));
    let x = g.element(ca.rep);
    let y = g.element(cb.rep);
    let mut acc = CycNum::zero();
    for h in g.elements() {
        let yc = y.conjugate_by(h);
        if x.compose(&yc) != yc.compose(x) {
            continue;
        }
        let xc = x.conjugate_by(&h.inverse());
        acc += &(sigma.value_at(&yc).unwrap() * &tau.value_at(&xc).unwrap().conj());
    }
    let den = (ca.centralizer.order() * cb.centralizer.order()) as i64;
    acc.scale(&BigRational::new(1.into(), den.into()))
}

#[test]
fn pairing_matches_defining_sum() {
    for m in [
        space(3),
        space(4),
        MSpace::new(&quotient_model("S3xS2").unwrap()).unwrap(),
    ] {
        for &a in m.pairs() {
            for &b in m.pairs() {
                assert_eq!(m.pairing(a, b), &pairing_oracle(&m, a, b));
            }
        }
    }
}

#[test]
fn pairing_values() {
    let s1 = space(1);
    assert_eq!(s1.pairing(s1.unit(), s1.unit()), &int(1));
    let s2 = space(2);
    let p = s2.find("g2", "eps").unwrap();
    assert_eq!(s2.pairing(p, p), &q(1, 2));
    let s4 = space(4);
    let trace: CycNum = s4.pairs().iter().map(|&p| s4.pairing(p, p).clone()).sum();
    assert_eq!(trace, int(9));
}

#[test]
fn expand_pair_examples() {
    let s4 = symmetric_group(4).unwrap();
    let m = MSpace::new(&s4).unwrap();
    let c = s4.class_by_label("g2'").unwrap();
    let z = m.centralizer(c);
    let c4 = z
        .subgroup("C4", &[crate::grp::Perm::parse(4, "(1 3 2 4)").unwrap()])
        .unwrap();
    let minus =
        crate::chr::character_table(&c4.with_key(crate::grp::Perm::parse(4, "(1 3 2 4)").unwrap()))
            .unwrap();
    let chi = minus.by_label("-1").unwrap();
    let chi = ClassFunction::new(c4.clone(), chi.values().to_vec())
        .induce(z)
        .unwrap();
    let v = m.expand_pair(c, &chi).unwrap();
    let expect =
        MVector::from_terms(&m, &[("g2'", "eps'", int(1)), ("g2'", "eps''", int(1))]).unwrap();
    assert_eq!(v, expect);

    let s5 = symmetric_group(5).unwrap();
    let m5 = MSpace::new(&s5).unwrap();
    let c5 = standard_subgroup(&s5, "C5").unwrap();
    let ind = ClassFunction::trivial(&c5).induce(&s5).unwrap();
    let z1 = m5.centralizer(0).clone();
    let ind = ClassFunction::new(z1, ind.values().to_vec());
    assert_eq!(
        m5.expand_pair(0, &ind).unwrap(),
        MVector::from_terms(&m5, &h5()).unwrap()
    );

    let neg = ClassFunction::trivial(m5.centralizer(0)).scale(&int(-1));
    assert!(m5.expand_pair(0, &neg).is_err());
}

#[test]
fn s3_fourier_of_p_theta() {
    let m = space(3);
    let p = MVector::from_terms(&m, &with(h3(), &[("g3", "theta", int(1))])).unwrap();
    let expect = MVector::from_terms(
        &m,
        &[
            ("g3", "theta", q(4, 3)),
            ("g3", "theta^2", q(1, 3)),
            ("g3", "1", q(1, 3)),
            ("1", "1", q(2, 3)),
            ("1", "r", q(1, 3)),
            // (1,eps) pairs with every term of P_theta exactly as (1,1) does
            ("1", "eps", q(2, 3)),
        ],
    )
    .unwrap();
    assert_eq!(m.fourier(&p).unwrap(), expect);
    assert!(m.is_bipositive(&p).unwrap());
}

#[test]
fn s4_fourier_of_p_i() {
    let m = space(4);
    let p = MVector::from_terms(&m, &with(h4(), &[("g4", "i", int(1))])).unwrap();
    let expect = MVector::from_terms(
        &m,
        &[
            ("g4", "i", q(3, 2)),
            ("g4", "-i", q(1, 2)),
            ("g2'", "eps'", q(3, 4)),
            ("g2'", "eps''", q(3, 4)),
            ("g2'", "1", q(1, 4)),
            ("g2'", "eps", q(1, 4)),
            ("1", "1", q(3, 4)),
            ("1", "lambda^1", q(1, 4)),
            ("1", "lambda^2", q(3, 4)),
            ("1", "lambda^3", q(1, 4)),
            ("1", "sigma", int(1)),
        ],
    )
    .unwrap();
    assert_eq!(m.fourier(&p).unwrap(), expect);
}

#[test]
fn s5_fourier_of_p_zeta3() {
    let m = space(5);
    let p = MVector::from_terms(
        &m,
        &with(h5(), &[("g5", "zeta^2", int(1)), ("g5", "zeta^3", int(1))]),
    )
    .unwrap();
    let expect = MVector::from_terms(
        &m,
        &[
            ("g5", "zeta", q(2, 5)),
            ("g5", "zeta^2", q(7, 5)),
            ("g5", "zeta^3", q(7, 5)),
            ("g5", "zeta^4", q(2, 5)),
            ("g5", "1", q(2, 5)),
            ("1", "1", q(3, 5)),
            ("1", "lambda^1", q(2, 5)),
            ("1", "lambda^2", q(8, 5)),
            ("1", "lambda^3", q(2, 5)),
            ("1", "lambda^4", q(3, 5)),
            ("1", "nu", int(1)),
            ("1", "nu'", int(1)),
        ],
    )
    .unwrap();
    assert_eq!(m.fourier(&p).unwrap(), expect);
    // A(P) - P is a multiple of the full g5 block, as the construction of P requires
    let diff = m.fourier(&p).unwrap().sub(&p).unwrap();
    let block: Vec<CycNum> = ["zeta", "zeta^2", "zeta^3", "zeta^4"]
        .iter()
        .map(|s| diff.get(m.find("g5", s).unwrap()).clone())
        .collect();
    assert!(block.iter().all(|c| c == &block[0]));
    let z = CycNum::root_of_unity(5, 1).unwrap();
    let c = -(z.pow(2) + z.pow(3));
    let p2 = MVector::from_terms(
        &m,
        &with(h5(), &[("g5", "zeta", c), ("g5", "zeta^2", int(1))]),
    )
    .unwrap();
    assert!(m.is_bipositive(&p2).unwrap());
}

#[test]
fn fixed_points() {
    let m5 = space(5);
    let cases5: Vec<Vec<(&str, &str, CycNum)>> = vec![
        vec![
            ("g5", "zeta", int(1)),
            ("g5", "zeta^2", int(-1)),
            ("g5", "zeta^3", int(-1)),
            ("g5", "zeta^4", int(1)),
        ],
        with(
            halve(h5()),
            &[("g5", "zeta", int(1)), ("g5", "zeta^4", int(1))],
        ),
        with(
            halve(h5()),
            &[("g5", "zeta^2", int(1)), ("g5", "zeta^3", int(1))],
        ),
    ];
    let m4 = space(4);
    let cases4: Vec<Vec<(&str, &str, CycNum)>> = vec![
        vec![("g4", "i", int(1)), ("g4", "-i", int(-1))],
        with(halve(h4()), &[("g4", "i", int(1))]),
        with(halve(h4()), &[("g4", "-i", int(1))]),
    ];
    let m3 = space(3);
    let cases3: Vec<Vec<(&str, &str, CycNum)>> = vec![
        vec![("g3", "theta", int(1)), ("g3", "theta^2", int(-1))],
        with(halve(h3()), &[("g3", "theta", int(1))]),
        with(halve(h3()), &[("g3", "theta^2", int(1))]),
    ];
    for (m, cases) in [(m5, cases5), (m4, cases4), (m3, cases3)] {
        for terms in cases {
            let v = MVector::from_terms(&m, &terms).unwrap();
            assert_eq!(m.fourier(&v).unwrap(), v, "{v}");
        }
    }
}

#[test]
fn lagrangian_examples() {
    let m3 = space(3);
    let p = MVector::from_terms(
        &m3,
        &with(h3(), &[("g3", "theta", int(1)), ("g3", "theta^2", int(1))]),
    )
    .unwrap();
    assert!(m3.is_lagrangian(&p).unwrap());
    let other = MVector::from_terms(
        &m3,
        &[
            ("g3", "theta", int(1)),
            ("g2", "1", int(1)),
            ("1", "1", int(1)),
        ],
    )
    .unwrap();
    assert!(m3.is_lagrangian(&other).unwrap());
    let m4 = space(4);
    let p = MVector::from_terms(
        &m4,
        &with(h4(), &[("g4", "i", int(1)), ("g4", "-i", int(1))]),
    )
    .unwrap();
    assert!(m4.is_lagrangian(&p).unwrap());
    let minus = MVector::basis(&m3, m3.unit()).scale(&int(-1));
    assert!(!m3.is_bipositive(&minus).unwrap());
}

#[test]
fn json_roundtrip() {
    let m = space(3);
    let v = MVector::from_terms(&m, &with(h3(), &[("g3", "theta", q(1, 2))])).unwrap();
    let j = v.to_json();
    assert_eq!(j["terms"].as_array().unwrap().len(), 3);
    assert_eq!(MVector::from_json(&m, &j).unwrap(), v);
    let short =
        serde_json::json!({"group": "S3", "terms": [{"x": "1", "sigma": "eps", "coeff": "3/2"}]});
    assert_eq!(
        MVector::from_json(&m, &short)
            .unwrap()
            .get(m.find("1", "eps").unwrap()),
        &q(3, 2)
    );
}
