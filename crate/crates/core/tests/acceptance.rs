//! The fourteen acceptance criteria, one PASS/FAIL line each.
//!
//! A criterion fails when any of its sub-checks disagrees with the expected
//! value. A few disagreements with the printed tables and displays are
//! known and analysed; they are listed in `KNOWN` and still reported as
//! FAIL. The binary exits nonzero only if the set of disagreements differs
//! from that list.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::{Arc, Mutex, OnceLock};
use std::time::Instant;

use newbasis::basis::{
    build_basis, cyclic_s, cyclic_s_prime, cyclic_space, primitive_vector, resolve, xbar_pairs,
    NewBasis, Stage, Tag,
};
use newbasis::chr::ClassFunction;
use newbasis::exact::CycNum;
use newbasis::grp::{standard_subgroup, symmetric_group, Group, Perm};
use newbasis::linalg::rank;
use newbasis::mspace::{model_space, MPair, MSpace, MVector};
use newbasis::symplectic::{
    fourier_vd, iota, iota_vector, is_bipositive, is_lagrangian, p_k, standard_model, to_mspace,
    F2Vector, VDFunction,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Disagreements with the printed values that are explained elsewhere.
const KNOWN: &[(usize, &[&str])] = &[
    (
        3,
        &[
            "S3 A(P_theta) at (1,eps): printed 1/3, computed 2/3",
            "S5 A(P_zeta^3) at (g5,zeta): printed 7/5, computed 2/5",
            "S5 A(P_zeta^3) at (g5,zeta^2): printed 2/5, computed 7/5",
            "S5 A(P_zeta^3) at (g5,zeta^3): printed 2/5, computed 7/5",
            "S5 A(P_zeta^3) at (g5,zeta^4): printed 7/5, computed 2/5",
        ],
    ),
    (
        5,
        &[
            "S4 row 17: printed \"g2' | (g2',eps) | (1,sigma) | (S1,S2xS2) | -1\", computed \"g2' | (g2',eps) | (1,sigma) | (S1,S2xS2) | 1\"",
            "S4 row 20: printed \"g4 | (g4,-i) | (1,1) | (S1,S4) | 1\", computed \"g4 | (g4,-i) | (1,1) | (S1,S4) | -1\"",
            "S5 row 25: printed \"g2' | (g2',eps) | (1,nu') | (S1,S2xS2) | -1\", computed \"g2' | (g2',eps) | (1,nu') | (S1,S2xS2) | 1\"",
            "S5 row 32: printed \"g4 | (g4,-i) | (1,lambda^1) | (S1,S4) | 1\", computed \"g4 | (g4,-i) | (1,lambda^1) | (S1,S4) | -1\"",
        ],
    ),
    (
        6,
        &[
            "row of h(1,1) at h(1,r): printed 1/2, computed 0",
            "row of h(1,1) at h(g2,eps): printed 0, computed 1/2",
        ],
    ),
    (
        8,
        &[
            "S5 A(h(g3,theta)) involves h(1,nu) of depth 4 >= 3",
            "S5 A(h(g3,theta)) involves h(g2,-1) of depth 3 >= 3",
            "S5 A(h(g3,theta)) involves h(g3,eps*theta) of depth 3 >= 3",
            "S5 A(h(g3,theta)) involves h(g6,theta) of depth 3 >= 3",
            "S5 A(h(g6,-theta)) involves h(g2,-1) of depth 3 >= 2",
            "S4 sign of h(1,sigma): printed -1, computed 1",
            "S4 sign of h(1,1): printed 1, computed -1",
            "S5 sign of h(1,nu'): printed -1, computed 1",
            "S5 sign of h(1,lambda^1): printed 1, computed -1",
            "sg(P_1) over S4: printed 1, computed -1",
        ],
    ),
];

const TITLES: [&str; 14] = [
    "involutivity of the Fourier transforms",
    "closed form of A(1,1)",
    "printed expansions of A(P_theta), A(P_i), A(P_zeta^3)",
    "traces tau(S4) = 9 and tau(S5) = 13",
    "golden tables",
    "new-basis rows over S3",
    "bipositivity and unitriangular expansions",
    "triangularity and signs",
    "piece minima",
    "Lagrangian census",
    "cyclic groups and Lagrangian primitives",
    "functoriality",
    "symplectic transforms",
    "structure of the bases",
];

fn int(n: i64) -> CycNum {
    CycNum::from_int(n)
}

fn q(a: i64, b: i64) -> CycNum {
    CycNum::frac(a, b)
}

fn basis(g: &str) -> Arc<NewBasis> {
    static CACHE: OnceLock<Mutex<BTreeMap<String, Arc<NewBasis>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(b) = cache.lock().unwrap().get(g) {
        return b.clone();
    }
    let b = Arc::new(build_basis(g).unwrap_or_else(|e| panic!("basis of {g}: {e}")));
    cache
        .lock()
        .unwrap()
        .entry(g.to_string())
        .or_insert(b)
        .clone()
}

fn space(g: &str) -> Arc<MSpace> {
    model_space(g).unwrap()
}

fn vector(m: &Arc<MSpace>, terms: &[(&str, &str, CycNum)]) -> MVector {
    MVector::from_terms(m, terms).unwrap()
}

fn hat_label(b: &NewBasis, i: usize) -> String {
    format!("h{}", b.space().pair_label(b.elements()[i].leading))
}

/// Mismatches collected by one criterion, plus remarks for the report.
#[derive(Default)]
struct Report {
    mismatches: Vec<String>,
    notes: Vec<String>,
}

impl Report {
    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.mismatches.push(what.into());
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    /// Coefficientwise comparison of a printed vector with a computed one.
    fn compare(&mut self, context: &str, printed: &MVector, computed: &MVector) {
        let sp = printed.space();
        for &p in sp.pairs() {
            let (a, b) = (printed.get(p), computed.get(p));
            if a != b {
                self.mismatches.push(format!(
                    "{context} at {}: printed {a}, computed {b}",
                    sp.pair_label(p)
                ));
            }
        }
    }
}

fn all_spaces() -> Vec<Arc<MSpace>> {
    let mut out: Vec<Arc<MSpace>> = ["S1", "S2", "S3", "S4", "S5", "S3xS2", "S2xS2"]
        .iter()
        .map(|g| space(g))
        .collect();
    out.extend((2..=6).map(|n| cyclic_space(n).unwrap()));
    let s4 = symmetric_group(4).unwrap();
    out.push(MSpace::new(&standard_subgroup(&s4, "D8").unwrap()).unwrap());
    out
}

fn delta(d: usize, x: u32) -> VDFunction {
    VDFunction::indicator(d, [x]).unwrap()
}

fn criterion_1() -> Report {
    let mut r = Report::default();
    let start = Instant::now();
    for m in all_spaces() {
        let a = m.pairing_matrix();
        let n = m.len();
        for i in 0..n {
            for j in 0..n {
                let s: CycNum = (0..n).map(|k| &a[i][k] * &a[k][j]).sum();
                r.check(
                    s == int(i64::from(i == j)),
                    format!("A^2 on {} at ({i},{j})", m.group().name()),
                );
            }
        }
    }
    for d in [2, 4, 6, 8] {
        for x in 0..1u32 << d {
            let f = delta(d, x);
            r.check(
                fourier_vd(&fourier_vd(&f)) == f,
                format!("fourier_vd^2 on V_{d} at {x}"),
            );
        }
    }
    let secs = start.elapsed().as_secs_f64();
    r.note(format!("{secs:.1} s"));
    r.check(secs < 10.0, format!("runtime {secs:.1} s exceeds 10 s"));
    r
}

fn criterion_2() -> Report {
    let mut r = Report::default();
    for m in all_spaces() {
        let mut expect = MVector::zero(&m);
        for &p in m.pairs() {
            let dim = m.table(p.class).dims()[p.irr];
            expect.set(p, q(dim, m.centralizer(p.class).order() as i64));
        }
        let got = m.fourier(&MVector::basis(&m, m.unit())).unwrap();
        r.check(got == expect, format!("A(1,1) on {}", m.group().name()));
    }
    r
}

fn criterion_3() -> Report {
    let mut r = Report::default();
    let s3 = space("S3");
    let printed = vector(
        &s3,
        &[
            ("g3", "theta", q(4, 3)),
            ("g3", "theta^2", q(1, 3)),
            ("g3", "1", q(1, 3)),
            ("1", "1", q(2, 3)),
            ("1", "r", q(1, 3)),
            ("1", "eps", q(1, 3)),
        ],
    );
    let p = primitive_vector(&s3, Tag::Root(20)).unwrap();
    r.compare("S3 A(P_theta)", &printed, &s3.fourier(&p).unwrap());

    let s4 = space("S4");
    let printed = vector(
        &s4,
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
    );
    let p = primitive_vector(&s4, Tag::Root(15)).unwrap();
    r.compare("S4 A(P_i)", &printed, &s4.fourier(&p).unwrap());

    let s5 = space("S5");
    let printed = vector(
        &s5,
        &[
            ("g5", "zeta", q(7, 5)),
            ("g5", "zeta^2", q(2, 5)),
            ("g5", "zeta^3", q(2, 5)),
            ("g5", "zeta^4", q(7, 5)),
            ("g5", "1", q(2, 5)),
            ("1", "1", q(3, 5)),
            ("1", "lambda^1", q(2, 5)),
            ("1", "lambda^2", q(8, 5)),
            ("1", "lambda^3", q(2, 5)),
            ("1", "lambda^4", q(3, 5)),
            ("1", "nu", int(1)),
            ("1", "nu'", int(1)),
        ],
    );
    let p = primitive_vector(&s5, Tag::Root(36)).unwrap();
    r.compare("S5 A(P_zeta^3)", &printed, &s5.fourier(&p).unwrap());
    r
}

fn golden(g: &str) -> String {
    let path = format!(
        "{}/tests/golden/{}.txt",
        env!("CARGO_MANIFEST_DIR"),
        g.to_lowercase()
    );
    std::fs::read_to_string(path).unwrap()
}

fn criterion_5() -> Report {
    let mut r = Report::default();
    for (g, rows) in [("S2", 4), ("S3", 8), ("S4", 21), ("S5", 39)] {
        let printed = golden(g);
        let computed = basis(g).table_text().unwrap();
        r.check(
            printed.lines().count() == rows,
            format!("{g} golden file has {rows} rows"),
        );
        r.check(
            computed.lines().count() == rows,
            format!("{g} table has {rows} rows"),
        );
        for (k, (a, b)) in printed.lines().zip(computed.lines()).enumerate() {
            r.check(
                a == b,
                format!("{g} row {}: printed {a:?}, computed {b:?}", k + 1),
            );
        }
    }
    r
}

/// Diagonal pairing values as printed for the trace sums.
fn printed_diagonal(g: &str) -> Vec<CycNum> {
    let z = |k: i64| CycNum::zeta60(12 * k);
    let list: &[(i64, i64)] = match g {
        "S4" => &[
            (1, 24),
            (3, 8),
            (1, 6),
            (3, 8),
            (1, 24),
            (1, 2),
            (3, 8),
            (1, 2),
            (2, 3),
            (1, 2),
            (3, 8),
            (3, 8),
            (1, 2),
            (1, 2),
            (1, 2),
            (1, 2),
            (3, 8),
            (2, 3),
            (2, 3),
            (1, 2),
            (1, 2),
        ],
        _ => &[
            (1, 120),
            (2, 15),
            (5, 24),
            (3, 10),
            (5, 24),
            (2, 15),
            (1, 120),
            (1, 3),
            (1, 3),
            (1, 3),
            (3, 8),
            (3, 8),
            (1, 3),
            (1, 3),
            (1, 3),
            (1, 2),
            (4, 5),
            (3, 8),
            (1, 3),
            (1, 3),
            (1, 2),
            (1, 2),
            (1, 3),
            (1, 3),
            (3, 8),
            (1, 3),
            (1, 3),
            (1, 3),
            (1, 3),
            (1, 3),
            (1, 3),
            (1, 2),
            (1, 2),
            (1, 3),
            (1, 3),
        ],
    };
    let mut out: Vec<CycNum> = list.iter().map(|&(a, b)| q(a, b)).collect();
    if g == "S5" {
        for k in 1..=4 {
            out.push((int(2) + z(k) + z(-k)) * &q(1, 5));
        }
    }
    out
}

fn criterion_4() -> Report {
    let mut r = Report::default();
    for (g, tau) in [("S4", 9), ("S5", 13)] {
        let b = basis(g);
        let sign_sum: i64 = b.elements().iter().map(|e| e.sign).sum();
        r.check(
            sign_sum == tau,
            format!("{g} sign sum {sign_sum}, printed {tau}"),
        );
        let m = b.space();
        let diag: Vec<CycNum> = m.pairs().iter().map(|&p| m.pairing(p, p).clone()).collect();
        let trace: CycNum = diag.iter().cloned().sum();
        r.check(
            trace == int(tau),
            format!("{g} trace {trace}, printed {tau}"),
        );
        let key = |v: &[CycNum]| {
            let mut s: Vec<String> = v.iter().map(ToString::to_string).collect();
            s.sort();
            s
        };
        r.check(
            key(&diag) == key(&printed_diagonal(g)),
            format!("{g} diagonal pairings differ from the printed terms as a multiset"),
        );
        r.note(format!("tau({g})={sign_sum}"));
    }
    r
}

fn criterion_6() -> Report {
    let mut r = Report::default();
    let b = basis("S3");
    let sp = b.space();
    let idx = |x: &str, s: &str| b.index_of(sp.find(x, s).unwrap());
    let rows: [(&str, &str, Vec<(&str, &str, CycNum)>); 2] = [
        (
            "1",
            "1",
            vec![
                ("1", "1", int(-1)),
                ("1", "r", q(1, 2)),
                ("g3", "theta^2", q(1, 3)),
                ("g3", "1", q(1, 3)),
                ("g2", "1", q(1, 6)),
                ("1", "eps", q(-1, 6)),
            ],
        ),
        (
            "1",
            "r",
            vec![
                ("1", "r", int(-1)),
                ("g2", "1", q(1, 2)),
                ("g2", "eps", q(1, 2)),
                ("1", "eps", q(1, 2)),
            ],
        ),
    ];
    for (x, s, terms) in rows {
        let i = idx(x, s);
        let mut printed = vec![CycNum::zero(); b.len()];
        for (y, t, c) in terms {
            printed[idx(y, t)] = c;
        }
        for (k, c) in printed.iter().enumerate() {
            let got = &b.fourier_matrix()[i][k];
            r.check(
                got == c,
                format!(
                    "row of h({x},{s}) at {}: printed {c}, computed {got}",
                    hat_label(&b, k)
                ),
            );
        }
    }
    r
}

fn criterion_7() -> Report {
    let mut r = Report::default();
    let z = |k: i64| CycNum::zeta60(12 * k);
    let special = -(z(2) + z(3));
    let mut count = 0;
    for g in ["S2", "S3", "S4", "S5"] {
        let b = basis(g);
        let sp = b.space();
        for e in b.elements() {
            count += 1;
            let name = format!("{g} h{}", sp.pair_label(e.leading));
            r.check(
                sp.is_bipositive(&e.vector).unwrap(),
                format!("{name} is not bipositive"),
            );
            r.check(
                e.vector.get(e.leading).is_one(),
                format!("{name} leading coefficient"),
            );
            for p in e.vector.support() {
                let c = e.vector.get(p);
                r.check(
                    b.leq(p, e.leading),
                    format!("{name} involves {} above it", sp.pair_label(p)),
                );
                r.check(c.is_nonneg_real(), format!("{name} has coefficient {c}"));
                if !c.to_rational().is_some_and(|x| x.is_integer()) {
                    r.check(
                        c == &special,
                        format!("{name} has non-integer coefficient {c}"),
                    );
                    r.check(
                        e.quotient == "S5" && e.tag == Tag::Root(24),
                        format!("{name} has a non-integer coefficient but is not from P_zeta^2"),
                    );
                }
            }
        }
    }
    r.check(count == 72, format!("{count} basis elements"));
    r.note(format!("{count} elements"));
    r
}

fn criterion_8() -> Report {
    let mut r = Report::default();
    for g in ["S3", "S4", "S5"] {
        let b = basis(g);
        let sp = b.space();
        for (i, k) in b.triangularity_violations() {
            let (ei, ek) = (&b.elements()[i], &b.elements()[k]);
            r.mismatches.push(format!(
                "{g} A({}) involves {} of depth {} >= {}",
                hat_label(&b, i),
                hat_label(&b, k),
                ek.depth,
                ei.depth
            ));
        }
        for (i, e) in b.elements().iter().enumerate() {
            let d = &b.fourier_matrix()[i][i];
            r.check(
                e.sign.abs() == 1 && d == &int(e.sign),
                format!("{g} diagonal at {}", hat_label(&b, i)),
            );
        }
        // fifth column: sign of h(partner), the partner being the third column
        for line in golden(g).lines() {
            let cols: Vec<&str> = line.split(" | ").collect();
            let (x, s) = cols[2]
                .trim_matches(|c| c == '(' || c == ')')
                .split_once(',')
                .unwrap();
            let printed: i64 = cols[4].parse().unwrap();
            let got = b.hat(sp.find(x, s).unwrap()).sign;
            r.check(
                got == printed,
                format!("{g} sign of h({x},{s}): printed {printed}, computed {got}"),
            );
        }
    }
    let sign_of = |g: &str, tag: Tag| {
        let b = basis(g);
        b.elements()
            .iter()
            .find(|e| e.quotient == g && e.tag == tag)
            .unwrap()
            .sign
    };
    for (g, tag, name, printed) in [
        ("S5", Tag::Root(12), "P_zeta", -1),
        ("S5", Tag::Root(0), "P_1", -1),
        ("S4", Tag::Root(0), "P_1", 1),
    ] {
        let got = sign_of(g, tag);
        r.check(
            got == printed,
            format!("sg({name}) over {g}: printed {printed}, computed {got}"),
        );
    }
    r
}

fn criterion_9() -> Report {
    let mut r = Report::default();
    for (g, expect) in [
        ("S3", vec!["(1,1)", "(g2,eps)", "(g3,theta)"]),
        (
            "S4",
            vec!["(1,1)", "(g2,eps')", "(g2',eps)", "(g3,theta)", "(g4,i)"],
        ),
        (
            "S5",
            vec![
                "(1,1)",
                "(g2,-1)",
                "(g2',eps)",
                "(g3,theta)",
                "(g4,i)",
                "(g5,zeta)",
                "(g6,-theta)",
            ],
        ),
    ] {
        let b = basis(g);
        let got: BTreeSet<String> = b
            .pieces()
            .iter()
            .map(|(l, _)| b.space().pair_label(b.piece_minimum(l).unwrap().leading))
            .collect();
        let expect: BTreeSet<String> = expect.into_iter().map(String::from).collect();
        r.check(
            got == expect,
            format!("{g} minima {got:?}, printed {expect:?}"),
        );
    }
    r
}

fn criterion_10() -> Report {
    let mut r = Report::default();
    for (g, n, images) in [
        ("S2", 3, vec!["(g2,eps)", "(1,eps)"]),
        ("S3", 5, vec!["(g3,theta^2)", "(g2,eps)", "(1,eps)"]),
        (
            "S4",
            12,
            vec![
                "(g4,-i)",
                "(g3,theta^2)",
                "(g2',eps)",
                "(g2,eps)",
                "(1,lambda^3)",
            ],
        ),
        (
            "S5",
            18,
            vec![
                "(g5,zeta^4)",
                "(g4,-i)",
                "(g6,-theta^2)",
                "(g3,eps*theta^2)",
                "(g2',eps)",
                "(g2,-eps)",
                "(1,lambda^4)",
            ],
        ),
    ] {
        let b = basis(g);
        let sp = b.space();
        match b.lagrangian_census() {
            Ok(c) => {
                r.check(
                    c.piece_one.len() == n,
                    format!("{g} piece 1 has {} elements", c.piece_one.len()),
                );
                r.check(
                    c.lagrangian.len() == n,
                    format!("{g} has {} Lagrangian elements", c.lagrangian.len()),
                );
                let got: BTreeSet<String> = c.images.iter().map(|&p| sp.pair_label(p)).collect();
                let expect: BTreeSet<String> = images.into_iter().map(String::from).collect();
                r.check(
                    got == expect,
                    format!("{g} I = {got:?}, printed {expect:?}"),
                );
                let pieces: BTreeSet<&str> =
                    c.images.iter().map(|&p| b.hat(p).piece.as_str()).collect();
                r.check(
                    pieces.len() == b.pieces().len(),
                    format!("{g} I misses a piece"),
                );
                r.note(format!("{g} {n}={}", c.lagrangian.len()));
            }
            Err(e) => r.mismatches.push(format!("{g} census: {e}")),
        }
    }
    r
}

fn cyclic_subgroup(gamma: &Arc<MSpace>, n: usize) -> Arc<Group> {
    let g = gamma.group();
    let cycle = Perm::from_images(
        (0..g.degree())
            .map(|i| if i < n { ((i + 1) % n) as u8 } else { i as u8 })
            .collect(),
    )
    .unwrap();
    g.subgroup(&format!("C{n}"), std::slice::from_ref(&cycle))
        .unwrap()
        .with_key(cycle)
}

fn criterion_11() -> Report {
    let mut r = Report::default();
    for n in 2..=6 {
        let c = cyclic_space(n).unwrap();
        let s = cyclic_s(&c).unwrap();
        r.check(
            c.fourier(&s).unwrap() == s,
            format!("S over C{n} is not fixed"),
        );
    }
    let c4 = cyclic_space(4).unwrap();
    let s = cyclic_s_prime(&c4).unwrap();
    r.check(c4.fourier(&s).unwrap() == s, "S' over C4 is not fixed");

    // images under the inclusion of C_n with n prime
    for n in [2usize, 3, 5] {
        let gamma = space(&format!("S{n}"));
        let c = cyclic_subgroup(&gamma, n);
        let st = Stage::inclusion(&gamma, &c).unwrap();
        let img = st.sigma_map(&cyclic_s(st.quotient()).unwrap()).unwrap();
        let m = n as i64 - 1;
        let mut expect = MVector::zero(&gamma);
        let gn = gamma.group().class_by_label(&format!("g{n}")).unwrap();
        for (irr, chi) in gamma.table(gn).irreducibles().iter().enumerate() {
            if !chi.values().iter().all(CycNum::is_one) {
                expect.set(MPair { class: gn, irr }, int(m));
            }
        }
        let unit = gamma.unit().class;
        let trivial = ClassFunction::trivial(&c);
        for (irr, rho) in gamma.table(unit).irreducibles().iter().enumerate() {
            let mult = rho.restrict(&c).unwrap().inner_product(&trivial).unwrap();
            expect.set(MPair { class: unit, irr }, mult.scale_int(m));
        }
        r.check(img == expect, format!("image of S for C{n} in S{n}"));
    }
    let s4 = space("S4");
    let c4 = standard_subgroup(s4.group(), "C4").unwrap();
    let st = Stage::inclusion(&s4, &c4).unwrap();
    let img = st
        .sigma_map(&cyclic_s_prime(st.quotient()).unwrap())
        .unwrap();
    let expect = vector(
        &s4,
        &[
            ("g4", "i", int(2)),
            ("g4", "-i", int(2)),
            ("g2'", "eps'", int(2)),
            ("g2'", "eps''", int(2)),
            ("1", "1", int(2)),
            ("1", "sigma", int(2)),
            ("1", "lambda^2", int(2)),
        ],
    );
    r.check(img == expect, "image of S' for C4 in S4");

    for (g, tag, name) in [
        ("S3", Tag::Root(40), "P_theta^2"),
        ("S4", Tag::Root(45), "P_-i"),
        ("S5", Tag::Root(48), "P_zeta^4"),
    ] {
        let m = space(g);
        r.check(
            m.is_lagrangian(&primitive_vector(&m, tag).unwrap())
                .unwrap(),
            format!("{name} over {g}"),
        );
    }
    let s3 = space("S3");
    for t in ["theta", "theta^2"] {
        let v = vector(
            &s3,
            &[("g3", t, int(1)), ("g2", "1", int(1)), ("1", "1", int(1))],
        );
        r.check(
            s3.is_lagrangian(&v).unwrap(),
            format!("(g3,{t})+(g2,1)+(1,1)"),
        );
    }
    for k in ["i", "-i"] {
        let v = vector(
            &s4,
            &[
                ("g4", k, int(1)),
                ("g2", "eps'", int(1)),
                ("g3", "1", int(1)),
                ("g2'", "eps'", int(1)),
                ("1", "1", int(1)),
            ],
        );
        r.check(
            s4.is_lagrangian(&v).unwrap(),
            format!("(g4,{k})+(g2,eps')+(g3,1)+(g2',eps')+(1,1)"),
        );
    }
    r
}

fn criterion_12() -> Report {
    let mut r = Report::default();
    let mut maps = 0;
    for g in ["S2", "S3", "S4", "S5"] {
        let m = space(g);
        for pair in xbar_pairs(g).unwrap() {
            let (h, hp) = resolve(m.group(), &pair).unwrap();
            let st = Stage::new(&m, &h, &hp).unwrap();
            let qs = st.quotient().clone();
            for &p in qs.pairs() {
                let v = MVector::basis(&qs, p);
                let lhs = m.fourier(&st.sigma_map(&v).unwrap()).unwrap();
                let rhs = st.sigma_map(&qs.fourier(&v).unwrap()).unwrap();
                r.check(lhs == rhs, format!("{g} {pair} at {}", qs.pair_label(p)));
            }
            maps += 1;
        }
    }
    r.note(format!("{maps} maps"));

    // 1 < S2xS2 < D8 in S4 and 1 < S2 < S2xS2 in S5
    for (g, h, hp) in [("S4", "S2xS2", "D8"), ("S5", "S2", "S2xS2")] {
        let m = space(g);
        let hg = standard_subgroup(m.group(), h).unwrap();
        let hpg = standard_subgroup(m.group(), hp).unwrap();
        let outer = Stage::inclusion(&m, &hpg).unwrap();
        let inner = Stage::new(outer.quotient(), &hg, &hpg).unwrap();
        let direct = Stage::new(&m, &hg, &hpg).unwrap();
        for &p in direct.quotient().pairs() {
            let v = MVector::basis(direct.quotient(), p);
            let two = outer.sigma_map(&inner.sigma_map(&v).unwrap()).unwrap();
            r.check(
                two == direct.sigma_map(&v).unwrap(),
                format!("composition for ({h},{hp}) in {g}"),
            );
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let s5 = space("S5");
    let pairs = xbar_pairs("S5").unwrap();
    for trial in 0..100 {
        let pair = &pairs[rng.gen_range(0..pairs.len())];
        let (h, hp) = resolve(s5.group(), pair).unwrap();
        let st = Stage::new(&s5, &h, &hp).unwrap();
        let qs = st.quotient().clone();
        let coeffs = (0..qs.len())
            .map(|_| q(rng.gen_range(0..6), rng.gen_range(1..5)))
            .collect();
        let v = MVector::from_coeffs(&qs, coeffs);
        r.check(
            st.sigma_map(&v).unwrap().is_nonnegative().unwrap(),
            format!("nonnegativity, trial {trial} on {pair}"),
        );
    }
    r
}

fn criterion_13() -> Report {
    let mut r = Report::default();
    for d in [2usize, 4, 6, 8] {
        for k in 0..=d / 2 {
            let p = p_k(d, k).unwrap();
            r.check(
                is_bipositive(&p).unwrap(),
                format!("P^{k} on V_{d} is not bipositive"),
            );
        }
        r.check(
            is_lagrangian(&p_k(d, d / 2).unwrap()),
            format!("P^{} on V_{d} is not Lagrangian", d / 2),
        );
        let basis: Vec<F2Vector> = (1..=d).map(|i| F2Vector::e(d, i).unwrap()).collect();
        let mut images = basis.clone();
        for step in 1..=d + 1 {
            images = images.iter().map(iota_vector).collect();
            r.check(
                (images == basis) == (step == d + 1),
                format!("iota^{step} on V_{d}"),
            );
        }
        for x in 0..1u32 << d {
            let f = delta(d, x);
            r.check(
                fourier_vd(&iota(&f)) == iota(&fourier_vd(&f)),
                format!("iota and fourier_vd on V_{d} at {x}"),
            );
        }
    }
    for d in [2, 4] {
        let (name, gens) = standard_model(d).unwrap();
        let m = space(name);
        for x in 0..1u32 << d {
            let f = delta(d, x);
            let lhs = to_mspace(&fourier_vd(&f), &m, &gens).unwrap();
            let rhs = m.fourier(&to_mspace(&f, &m, &gens).unwrap()).unwrap();
            r.check(lhs == rhs, format!("identification on V_{d} at {x}"));
        }
    }
    r
}

/// The unique perfect matching of the support graph, found by repeatedly
/// matching a vertex of degree one.
fn forced_matching(b: &NewBasis) -> Option<Vec<MPair>> {
    let sp = b.space();
    let n = b.len();
    let mut adj: Vec<BTreeSet<usize>> = b
        .elements()
        .iter()
        .map(|e| e.vector.support().iter().map(|&p| sp.index(p)).collect())
        .collect();
    let mut matched: Vec<Option<usize>> = vec![None; n];
    let mut live_cols: BTreeSet<usize> = (0..n).collect();
    for _ in 0..n {
        let row = (0..n).find(|&i| matched[i].is_none() && adj[i].len() == 1);
        let (i, c) = match row {
            Some(i) => (i, *adj[i].iter().next().unwrap()),
            None => {
                let c = *live_cols.iter().find(|&&c| {
                    adj.iter()
                        .enumerate()
                        .filter(|(i, a)| matched[*i].is_none() && a.contains(&c))
                        .count()
                        == 1
                })?;
                let i = (0..n).find(|&i| matched[i].is_none() && adj[i].contains(&c))?;
                (i, c)
            }
        };
        matched[i] = Some(c);
        live_cols.remove(&c);
        for a in adj.iter_mut() {
            a.remove(&c);
        }
        adj[i].clear();
    }
    matched
        .into_iter()
        .map(|c| c.map(|c| sp.pairs()[c]))
        .collect()
}

fn criterion_14() -> Report {
    let mut r = Report::default();
    for g in ["S1", "S2", "S3", "S4", "S5"] {
        let b = basis(g);
        let sp = b.space();
        r.check(
            b.len() == sp.len(),
            format!("{g} has {} elements for {} pairs", b.len(), sp.len()),
        );
        let rows: Vec<Vec<CycNum>> = b
            .elements()
            .iter()
            .map(|e| e.vector.coeffs().to_vec())
            .collect();
        r.check(
            rank(&rows).unwrap() == sp.len(),
            format!("{g} basis is not of full rank"),
        );
        match forced_matching(&b) {
            Some(m) => {
                for (e, p) in b.elements().iter().zip(m) {
                    r.check(
                        e.leading == p,
                        format!("{g} matching differs at {}", sp.pair_label(p)),
                    );
                    r.check(
                        e.vector.get(p).is_one(),
                        format!("{g} leading coefficient at {}", sp.pair_label(p)),
                    );
                }
            }
            None => r
                .mismatches
                .push(format!("{g} support graph has no unique perfect matching")),
        }
        for &a in sp.pairs() {
            for &c in sp.pairs() {
                r.check(
                    a == c || !(b.leq(a, c) && b.leq(c, a)),
                    format!("{g} order is not antisymmetric"),
                );
            }
        }
    }
    r
}

fn main() {
    let start = Instant::now();
    let criteria: [fn() -> Report; 14] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
        criterion_10,
        criterion_11,
        criterion_12,
        criterion_13,
        criterion_14,
    ];
    let mut unexpected = Vec::new();
    for (run, n) in criteria.iter().zip(1..) {
        let report = run();
        let mut got = report.mismatches.clone();
        got.sort();
        got.dedup();
        let mut known: Vec<String> = KNOWN
            .iter()
            .find(|(k, _)| *k == n)
            .map_or(vec![], |(_, l)| l.iter().map(|s| s.to_string()).collect());
        known.sort();
        if got != known {
            unexpected.push((n, got.clone(), known));
        }
        let status = if got.is_empty() { "PASS" } else { "FAIL" };
        let mut line = format!("criterion {n:>2}: {status}  {}", TITLES[n - 1]);
        if !report.notes.is_empty() {
            line += &format!(" [{}]", report.notes.join(", "));
        }
        for m in &got {
            line += &format!("\n      {m}");
        }
        println!("{line}");
    }
    println!("total {:.1} s", start.elapsed().as_secs_f64());
    if !unexpected.is_empty() {
        for (n, got, known) in unexpected {
            eprintln!("criterion {n}: unexpected result\n  got:   {got:?}\n  known: {known:?}");
        }
        std::process::exit(1);
    }
}
