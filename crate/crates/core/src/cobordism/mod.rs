//! Rational oriented cobordism: Pontryagin-number vectors, genera as linear
//! functionals, and polynomial families of manifolds.

mod basis;
mod family;
mod vector;

pub use basis::{
    basis_manifolds, cp_product, elliptic_rank_profile, elliptic_span, genus_as_functional, genus_as_functional_in,
    span_membership, span_rank, Basis, NamedGenus, MAX_WEIGHT,
};
pub use family::{
    designated_families, distinct_cobordism_types, family_polynomial, joint_kernel, unbounded_verdict,
    DistinctnessReport, FamilySpec, Verdict,
};
pub use vector::{pontryagin_numbers, CharNumberVector, Functional};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat, Partition, Polynomial};
    use crate::genera::{ahat, signature, twisted_ahat_tangent};
    use crate::manifolds::{build_cp, build_hp, product, x12, y16};

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn x12_numbers() {
        let v = pontryagin_numbers(&x12(2)).unwrap();
        assert_eq!(v.get(&part(&[1, 1, 1])), int(-64));
        assert_eq!(v.get(&part(&[2, 1])), int(-48));
        assert_eq!(v.get(&part(&[3])), int(-8));
    }

    #[test]
    fn y16_numbers_at_one() {
        let v = pontryagin_numbers(&y16(1)).unwrap();
        assert_eq!(v.get(&part(&[1, 1, 1, 1])), int(52224));
        assert_eq!(v.get(&part(&[2, 1, 1])), int(27264));
        assert_eq!(v.get(&part(&[3, 1])), int(4704));
        assert_eq!(v.get(&part(&[2, 2])), int(11520));
        assert_eq!(v.get(&part(&[4])), int(288));
    }

    #[test]
    fn family_polynomials_of_x12() {
        let polys = FamilySpec::x12_all().number_polynomials().unwrap();
        assert_eq!(polys[&part(&[1, 1, 1])], Polynomial::from_ints(&[0, 0, 0, -8]));
        assert_eq!(polys[&part(&[2, 1])], Polynomial::from_ints(&[0, 0, 0, -6]));
        assert_eq!(polys[&part(&[3])], Polynomial::from_ints(&[0, 0, 0, -1]));
    }

    #[test]
    fn z20_number_polynomials() {
        let polys = FamilySpec::z20_all().number_polynomials().unwrap();
        let expect: [(&[u32], [i64; 8]); 7] = [
            (&[1, 1, 1, 1, 1], [0, 0, 0, -5120, 0, -1920, 0, -192]),
            (&[2, 1, 1, 1], [0, 0, 0, -2912, 0, -960, 0, -78]),
            (&[3, 1, 1], [0, 0, 0, -1056, 0, -240, 0, -9]),
            (&[2, 2, 1], [0, 0, 0, -1616, 0, -456, 0, -27]),
            (&[4, 1], [0, 0, 0, -232, 0, -24, 0, 0]),
            (&[3, 2], [0, 0, 0, -580, 0, -96, 0, -3]),
            (&[5], [0, 0, 0, -28, 0, 0, 0, 0]),
        ];
        for (p, c) in expect {
            assert_eq!(polys[&part(p)], Polynomial::from_ints(&c), "{}", part(p));
        }
    }

    #[test]
    fn product_family_is_multiple_of_x12() {
        // p_I[X × HP²] is a fixed combination of the numbers of X, all ∝ c³
        let polys = FamilySpec::x12_times_hp(2).number_polynomials().unwrap();
        for poly in polys.values() {
            for i in [0, 1, 2, 4, 5] {
                assert_eq!(poly.coeff(i), int(0));
            }
        }
        assert_eq!(polys[&part(&[5])], Polynomial::from_ints(&[0, 0, 0, -56]));
        assert_eq!(polys[&part(&[4, 1])], Polynomial::from_ints(&[0, 0, 0, -368]));
        assert_eq!(polys[&part(&[3, 2])], Polynomial::from_ints(&[0, 0, 0, -584]));
    }

    #[test]
    fn basis_sizes_and_ranks() {
        for (dim, n) in [(4, 1), (8, 2), (12, 3), (16, 5), (20, 7)] {
            let b = Basis::new(dim).unwrap();
            assert_eq!(b.manifolds().len(), n);
            assert_eq!(b.numbers().rank(), n);
        }
        assert!(matches!(Basis::new(6), Err(crate::Error::NotMultipleOfFour(6))));
    }

    #[test]
    fn signature_is_l_polynomial() {
        let f = genus_as_functional(NamedGenus::Signature, 12).unwrap();
        assert_eq!(f.coefficient(&part(&[3])), rat(62, 945));
        assert_eq!(f.coefficient(&part(&[2, 1])), rat(-13, 945));
        assert_eq!(f.coefficient(&part(&[1, 1, 1])), rat(2, 945));
        assert_eq!(f.to_string(), "62/945*p3 - 13/945*p1*p2 + 2/945*p1^3");
    }

    #[test]
    fn functionals_reproduce_genera() {
        let ms = [product(&build_cp(2).unwrap(), &build_hp(2).unwrap()).unwrap(), x12(3), build_cp(6).unwrap()];
        let b = Basis::new(12).unwrap();
        let sig = genus_as_functional_in(&b, NamedGenus::Signature).unwrap();
        let ah = genus_as_functional_in(&b, NamedGenus::AHat).unwrap();
        let aht = genus_as_functional_in(&b, NamedGenus::AHatTangent).unwrap();
        for m in &ms {
            assert_eq!(sig.evaluate_on(m).unwrap(), signature(m).unwrap());
            assert_eq!(ah.evaluate_on(m).unwrap(), ahat(m).unwrap());
            assert_eq!(aht.evaluate_on(m).unwrap(), twisted_ahat_tangent(m).unwrap());
        }
    }

    #[test]
    fn elliptic_span_ranks() {
        assert_eq!(elliptic_span(12, 4).unwrap().1, 2);
        assert_eq!(elliptic_span(16, 6).unwrap().1, 3);
        assert_eq!(elliptic_span(20, 6).unwrap().1, 3);
    }

    #[test]
    fn rank_is_monotone_and_stabilizes() {
        for (dim, rank) in [(12, 2), (16, 3), (20, 3)] {
            let k = dim as usize / 4;
            let profile = elliptic_rank_profile(dim, k + 2).unwrap();
            assert!(profile.windows(2).all(|w| w[0].1 <= w[1].1));
            assert!(profile[k..].iter().all(|&(_, r)| r == rank), "{dim}: {profile:?}");
        }
    }

    #[test]
    fn membership() {
        let (span, _) = elliptic_span(16, 6).unwrap();
        let sig = genus_as_functional(NamedGenus::Signature, 16).unwrap();
        let aht = genus_as_functional(NamedGenus::AHatTangent, 16).unwrap();
        assert!(span_membership(&sig, &span).unwrap());
        assert!(span_membership(&aht, &span).unwrap());
        let p4 = Functional::pontryagin(16, &part(&[4])).unwrap();
        assert!(!span_membership(&p4, &span).unwrap());
    }

    #[test]
    fn verdicts() {
        let fams = designated_families(12).unwrap();
        let p3 = Functional::pontryagin(12, &part(&[3])).unwrap();
        match unbounded_verdict(&p3, &fams).unwrap() {
            Verdict::Unbounded { witness, polynomial, .. } => {
                assert_eq!(witness, "X12");
                assert_eq!(polynomial, Polynomial::from_ints(&[0, 0, 0, -8]));
            }
            v => panic!("{v:?}"),
        }
        let sig = genus_as_functional(NamedGenus::Signature, 12).unwrap();
        assert!(!unbounded_verdict(&sig, &fams).unwrap().is_unbounded());
    }

    #[test]
    fn distinctness() {
        let r = distinct_cobordism_types(&FamilySpec::x12(), &[1, 2, 3]).unwrap();
        assert!(r.distinct);
        assert_eq!(r.separators.len(), 3);
        assert!(r.separators.iter().all(|(_, _, p)| p.as_ref() == Some(&part(&[3]))));
        let r = distinct_cobordism_types(&FamilySpec::x12(), &[0, 0]).unwrap();
        assert!(!r.distinct);
    }

    #[test]
    fn dimension_mismatch() {
        let f = Functional::pontryagin(16, &part(&[4])).unwrap();
        assert!(family_polynomial(&FamilySpec::x12(), &f).is_err());
    }
}
