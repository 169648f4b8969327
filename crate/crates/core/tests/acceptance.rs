//! Acceptance criteria. Each test prints one `PASS`/`FAIL` line and then
//! fails if any of its checks failed. All comparisons are exact.

use charclass::algebra::{int, rat, ExactRational, Partition, Polynomial};
use charclass::cobordism::{
    designated_families, distinct_cobordism_types, elliptic_rank_profile, elliptic_span, family_polynomial,
    genus_as_functional, joint_kernel, pontryagin_numbers, span_membership, unbounded_verdict, FamilySpec, Functional,
    NamedGenus, Verdict,
};
use charclass::genera::{
    ahat, ahat_genus, ahat_series, elliptic_q_coefficients, elliptic_series, k_polynomials_with_variables, l_series,
    signature, signature_genus, tangent_twist_series, EllipticGenus, TangentTwistedAhat,
};
use charclass::manifolds::{build_cp, build_hp, build_proj_bundle, product, x12, y16, z20, LineBundleSum};
use charclass::ManifoldModel;

struct Report {
    id: u32,
    title: &'static str,
    failures: Vec<String>,
    checks: usize,
}

impl Report {
    fn new(id: u32, title: &'static str) -> Self {
        Report { id, title, failures: Vec::new(), checks: 0 }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, got: T, want: T, label: impl FnOnce() -> String) {
        let ok = got == want;
        self.check(ok, || format!("{}: got {got:?}, want {want:?}", label()));
    }

    fn finish(self) {
        let status = if self.failures.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {:>2}: {status} ({} checks) {}", self.id, self.checks, self.title);
        for f in &self.failures {
            println!("    {f}");
        }
        assert!(
            self.failures.is_empty(),
            "criterion {} failed: {} of {} checks",
            self.id,
            self.failures.len(),
            self.checks
        );
    }
}

fn part(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn c3_times(c: i64, coeffs: &[i64]) -> ExactRational {
    // c^3 * Σ coeffs[i] c^{2i}
    let mut acc = int(0);
    let mut pow = int(c * c * c);
    for &k in coeffs {
        acc += &pow * int(k);
        pow *= int(c * c);
    }
    acc
}

fn poly(c: &[i64]) -> Polynomial {
    Polynomial::from_ints(c)
}

#[test]
fn criterion_01_x12_numbers() {
    let mut r = Report::new(1, "X12_c Pontryagin numbers, c in -3..=3");
    for c in -3..=3 {
        let v = pontryagin_numbers(&x12(c)).unwrap();
        r.eq(v.get(&part(&[1, 1, 1])), int(-8 * c * c * c), || format!("p1^3 at c={c}"));
        r.eq(v.get(&part(&[2, 1])), int(-6 * c * c * c), || format!("p1*p2 at c={c}"));
        r.eq(v.get(&part(&[3])), int(-c * c * c), || format!("p3 at c={c}"));
    }
    r.finish();
}

#[test]
fn criterion_02_y16_numbers() {
    let mut r = Report::new(2, "Y16_c Pontryagin numbers, c in -2..=2");
    let forms: [(&[u32], [i64; 2]); 5] = [
        (&[1, 1, 1, 1], [768 * 12, 768 * 56]),
        (&[2, 1, 1], [384 * 15, 384 * 56]),
        (&[3, 1], [48 * 42, 48 * 56]),
        (&[2, 2], [144 * 24, 144 * 56]),
        (&[4], [288, 0]),
    ];
    for c in -2..=2 {
        let v = pontryagin_numbers(&y16(c)).unwrap();
        for (p, f) in &forms {
            r.eq(v.get(&part(p)), c3_times(c, f), || format!("{} at c={c}", part(p)));
        }
    }
    r.finish();
}

#[test]
fn criterion_03_z20_numbers() {
    let mut r = Report::new(3, "Z20_c Pontryagin numbers, c in -2..=2");
    let forms: [(&[u32], [i64; 3]); 7] = [
        (&[1, 1, 1, 1, 1], [-64 * 80, -64 * 30, -64 * 3]),
        (&[2, 1, 1, 1], [-2 * 1456, -2 * 480, -2 * 39]),
        (&[3, 1, 1], [-3 * 352, -3 * 80, -3 * 3]),
        (&[2, 2, 1], [-1616, -456, -27]),
        (&[4, 1], [-8 * 29, -8 * 3, 0]),
        (&[3, 2], [-580, -96, -3]),
        (&[5], [-28, 0, 0]),
    ];
    for c in -2..=2 {
        let v = pontryagin_numbers(&z20(c)).unwrap();
        for (p, f) in &forms {
            r.eq(v.get(&part(p)), c3_times(c, f), || format!("{} at c={c}", part(p)));
        }
    }
    r.finish();
}

#[test]
fn criterion_04_spin() {
    let mut r = Report::new(4, "spin iff c_1(E) even, c in -4..=4");
    for c in -4..=4i64 {
        r.eq(x12(c).is_spin(), c % 2 == 0, || format!("X12 at c={c}"));
        r.eq(y16(c).is_spin(), true, || format!("Y16 at c={c}"));
        r.eq(z20(c).is_spin(), c % 2 == 0, || format!("Z20 at c={c}"));
    }
    r.finish();
}

#[test]
fn criterion_05_elliptic_vanishing() {
    let mut r = Report::new(5, "elliptic genus vanishes on the spin families to q^3");
    let zero = vec![int(0); 4];
    let mut models: Vec<ManifoldModel> = Vec::new();
    for c in 1..=3 {
        models.push(x12(2 * c));
        models.push(y16(c));
        models.push(z20(2 * c));
    }
    models.push(product(&x12(2), &build_hp(2).unwrap()).unwrap());
    for m in &models {
        r.eq(elliptic_q_coefficients(m, 3).unwrap(), zero.clone(), || m.name().to_string());
    }
    r.finish();
}

#[test]
fn criterion_06_span_ranks() {
    let mut r = Report::new(6, "rank of the elliptic span: 2 (dim 12), 3 (dim 16), 3 (dim 20)");
    for (dim, want) in [(12u32, 2usize), (16, 3), (20, 3)] {
        let k = dim as usize / 4;
        let (_, rank) = elliptic_span(dim, k).unwrap();
        r.eq(rank, want, || format!("dim {dim} at q-order {k}"));
        let profile = elliptic_rank_profile(dim, k + 3).unwrap();
        println!("    dim {dim}: rank by q-order {:?}", profile.iter().map(|p| p.1).collect::<Vec<_>>());
        r.check(profile[k..].iter().all(|&(_, x)| x == want), || format!("dim {dim} not stable: {profile:?}"));
    }
    r.finish();
}

#[test]
fn criterion_07_unboundedness_engine() {
    let mut r = Report::new(7, "non-elliptic functionals are unbounded on the families (dims 12, 16, 20)");

    // dim 12
    let p3 = Functional::pontryagin(12, &part(&[3])).unwrap();
    let (span12, _) = elliptic_span(12, 3).unwrap();
    r.eq(span_membership(&p3, &span12).unwrap(), false, || "p3 in dim-12 span".into());
    match unbounded_verdict(&p3, &designated_families(12).unwrap()).unwrap() {
        Verdict::Unbounded { witness, polynomial, .. } => {
            r.eq(witness.as_str(), "X12", || "dim-12 witness".into());
            r.eq(polynomial, poly(&[0, 0, 0, -8]), || "p3 on X12_{2c}".into());
        }
        v => r.check(false, || format!("p3 verdict {v:?}")),
    }

    // dim 16
    let y = FamilySpec::y16();
    let p1_4 = Functional::pontryagin(16, &part(&[1, 1, 1, 1])).unwrap();
    let p4 = Functional::pontryagin(16, &part(&[4])).unwrap();
    r.eq(family_polynomial(&y, &p1_4).unwrap(), poly(&[0, 0, 0, 9216, 0, 43008]), || "p1^4 on Y16".into());
    r.eq(family_polynomial(&y, &p4).unwrap(), poly(&[0, 0, 0, 288]), || "p4 on Y16".into());
    r.eq(joint_kernel(&[p1_4.clone(), p4.clone()], std::slice::from_ref(&y)).unwrap().len(), 0, || "dim-16 kernel".into());
    let genera16: Vec<Functional> = [NamedGenus::Signature, NamedGenus::AHat, NamedGenus::AHatTangent]
        .into_iter()
        .map(|g| genus_as_functional(g, 16).unwrap())
        .collect();
    for g in &genera16 {
        r.eq(family_polynomial(&y, g).unwrap(), poly(&[]), || format!("genus {g} on Y16"));
    }
    for (l4, l5) in [(1, 0), (0, 1), (1, -32), (-3, 7)] {
        let f = p1_4.scale(&int(l4)).try_add(&p4.scale(&int(l5))).unwrap();
        let f = genera16.iter().fold(f, |acc, g| acc.try_add(g).unwrap());
        r.check(unbounded_verdict(&f, &designated_families(16).unwrap()).unwrap().is_unbounded(), || {
            format!("({l4}, {l5}) bounded on Y16")
        });
    }

    // dim 20, in the coordinates λ4..λ7 of p5, p1p4, p2p3, p1^2p3
    let basis20: Vec<Functional> = [&[5u32][..], &[4, 1], &[3, 2], &[3, 1, 1]]
        .iter()
        .map(|p| Functional::pontryagin(20, &part(p)).unwrap())
        .collect();
    let z = FamilySpec::z20();
    let xh = FamilySpec::x12_times_hp(2);
    let z_expected = [
        poly(&[0, 0, 0, -8 * 28]),
        poly(&[0, 0, 0, -8 * 232, 0, -32 * 24]),
        poly(&[0, 0, 0, -8 * 580, 0, -32 * 96, 0, -128 * 3]),
        poly(&[0, 0, 0, -8 * 1056, 0, -32 * 240, 0, -128 * 9]),
    ];
    // as displayed for the product family
    let xh_displayed = [
        poly(&[0, 0, 0, -8 * 7]),
        poly(&[0, 2 * 224, 4 * 42, -8 * 4]),
        poly(&[0, 2 * 352, 4 * 66, -8 * 7]),
        poly(&[0, 2 * 256, 4 * 48, 8 * 52]),
    ];
    for (i, f) in basis20.iter().enumerate() {
        let lambda = i + 4;
        r.eq(family_polynomial(&z, f).unwrap(), z_expected[i].clone(), || format!("λ{lambda} on Z20_{{2c}}"));
        let got = family_polynomial(&xh, f).unwrap();
        let (got_s, want_s) = (got.to_string(), xh_displayed[i].to_string());
        r.check(got == xh_displayed[i], || {
            format!("λ{lambda} on X12_{{2c}} x HP^2: computed {got_s}, displayed {want_s}")
        });
    }
    r.eq(joint_kernel(&basis20, &[z, xh]).unwrap().len(), 0, || "dim-20 joint kernel".into());
    let (span20, _) = elliptic_span(20, 5).unwrap();
    for f in &span20 {
        for fam in designated_families(20).unwrap() {
            r.check(family_polynomial(&fam, f).unwrap().is_zero(), || {
                format!("elliptic functional nonzero on {}", fam.name())
            });
        }
    }
    r.finish();
}

#[test]
fn criterion_08_distinct_cobordism_types() {
    let mut r = Report::new(8, "pairwise distinct cobordism types along the families, c in 1..=5");
    let params: Vec<i64> = (1..=5).collect();
    for fam in [FamilySpec::x12(), FamilySpec::y16(), FamilySpec::x12_times_hp(2), FamilySpec::x12_times_hp(3)] {
        let rep = distinct_cobordism_types(&fam, &params).unwrap();
        r.check(rep.distinct, || format!("{} not distinct: {:?}", fam.name(), rep.separators));
        r.eq(rep.separators.len(), 10, || format!("{} pair count", fam.name()));
    }
    r.finish();
}

#[test]
fn criterion_09_genus_oracles() {
    let mut r = Report::new(9, "signature and Â on CP^2i and HP^2");
    for i in 1..=3 {
        r.eq(signature(&build_cp(2 * i).unwrap()).unwrap(), int(1), || format!("sign CP^{}", 2 * i));
    }
    r.eq(ahat(&build_cp(2).unwrap()).unwrap(), rat(-1, 8), || "Â(CP^2)".into());
    let hp2 = build_hp(2).unwrap();
    r.check(hp2.roots().is_none(), || "HP^2 should use explicit Pontryagin classes".into());
    r.eq(signature(&hp2).unwrap(), int(1), || "sign HP^2".into());
    r.eq(ahat(&hp2).unwrap(), int(0), || "Â(HP^2)".into());
    r.finish();
}

fn root_models() -> Vec<ManifoldModel> {
    let mut ms: Vec<ManifoldModel> = (1..=6).map(|n| build_cp(n).unwrap()).collect();
    for c in -2..=2 {
        ms.push(x12(c));
        ms.push(y16(c));
    }
    ms.push(z20(1));
    ms.push(z20(2));
    for (l, d) in [(1, vec![0, 3]), (2, vec![1, -1]), (3, vec![0, 0, 2]), (2, vec![1, 2, 3]), (4, vec![0, 5])] {
        ms.push(build_proj_bundle(&LineBundleSum::new(l, d).unwrap()).unwrap());
    }
    ms.push(product(&build_cp(2).unwrap(), &x12(2)).unwrap());
    ms.push(product(&build_cp(3).unwrap(), &build_cp(1).unwrap()).unwrap());
    ms
}

#[test]
fn criterion_10_property_suites() {
    let mut r = Report::new(10, "dual pipeline, stability, integrality, multiplicativity");

    // roots versus universal K-polynomials
    for m in root_models() {
        if m.real_dimension() % 4 != 0 {
            continue;
        }
        let k = m.real_dimension() / 4;
        for g in [signature_genus(k).unwrap(), ahat_genus(k).unwrap()] {
            let a = g.via_k_polynomials(&m).unwrap();
            let b = g.via_roots(&m).unwrap();
            r.eq(Some(a), b, || format!("{} dual pipeline on {}", g.series().name(), m.name()));
        }
        let t = TangentTwistedAhat::new(k).unwrap();
        r.eq(Some(t.via_k_polynomials(&m).unwrap()), t.via_roots(&m).unwrap(), || format!("Â(M;T) on {}", m.name()));
        let e = EllipticGenus::new(k, 2).unwrap();
        r.eq(Some(e.genus().via_k_polynomials(&m).unwrap()), e.genus().via_roots(&m).unwrap(), || {
            format!("elliptic on {}", m.name())
        });
    }

    // stability in the number of formal variables
    for k in 1..=5u32 {
        let o = k as usize;
        let n = k as usize;
        let same = |a: &dyn Fn(usize) -> String| a(n) == a(n + 1);
        r.check(same(&|m| k_polynomials_with_variables(&l_series(o), k, m).unwrap().to_string()), || {
            format!("L at {k}")
        });
        r.check(same(&|m| k_polynomials_with_variables(&ahat_series(o), k, m).unwrap().to_string()), || {
            format!("Â at {k}")
        });
    }
    for k in 1..=3u32 {
        let (ell, _) = elliptic_series(k as usize, 2);
        let a = k_polynomials_with_variables(&ell, k, k as usize).unwrap();
        let b = k_polynomials_with_variables(&ell, k, k as usize + 1).unwrap();
        r.check((0..=k).all(|j| a.k_poly(j) == b.k_poly(j)), || format!("elliptic at {k}"));
        let tw = tangent_twist_series(k as usize);
        let a = k_polynomials_with_variables(&tw, k, k as usize).unwrap();
        let b = k_polynomials_with_variables(&tw, k, k as usize + 1).unwrap();
        r.check((0..=k).all(|j| a.k_poly(j) == b.k_poly(j)), || format!("twist at {k}"));
    }

    // integrality
    let mut all = root_models();
    all.extend((1..=4).map(|n| build_hp(n).unwrap()));
    all.push(product(&x12(2), &build_hp(2).unwrap()).unwrap());
    for m in &all {
        if m.real_dimension() % 4 == 0 {
            r.check(pontryagin_numbers(m).unwrap().is_integral(), || format!("{} numbers", m.name()));
            if m.is_spin() {
                let q = elliptic_q_coefficients(m, 3).unwrap();
                r.check(q.iter().all(|x| x.is_integer()), || format!("{} elliptic {q:?}", m.name()));
                r.check(ahat(m).unwrap().is_integer(), || format!("{} Â", m.name()));
            }
        }
    }

    // multiplicativity on products
    let factors = [build_cp(2).unwrap(), build_hp(2).unwrap(), build_cp(4).unwrap(), x12(2), build_hp(1).unwrap()];
    for (i, a) in factors.iter().enumerate() {
        for b in &factors[i..] {
            let ab = product(a, b).unwrap();
            if ab.real_dimension() > 24 {
                continue;
            }
            let label = || format!("{} x {}", a.name(), b.name());
            r.eq(signature(&ab).unwrap(), signature(a).unwrap() * signature(b).unwrap(), || {
                format!("sign {}", label())
            });
            r.eq(ahat(&ab).unwrap(), ahat(a).unwrap() * ahat(b).unwrap(), || format!("Â {}", label()));
            let qa = elliptic_q_coefficients(a, 3).unwrap();
            let qb = elliptic_q_coefficients(b, 3).unwrap();
            let want: Vec<ExactRational> = (0..=3).map(|n| (0..=n).map(|i| &qa[i] * &qb[n - i]).sum()).collect();
            r.eq(elliptic_q_coefficients(&ab, 3).unwrap(), want, || format!("φ {}", label()));
        }
    }
    r.finish();
}
