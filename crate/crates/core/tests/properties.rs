//! Property tests over the core invariants, each checked against a direct
//! brute-force computation where one is cheap.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use brpic::abelian::AbelianGroup;
use brpic::cohomology::{
    class_of, cohomology, elementary_divisors, is_symmetric_cocycle, smith_normal_form, Cocycle,
    GModule, IntMatrix,
};
use brpic::fusion::examples::{rep_r_q8, z_q_minus, z_q_plus};
use brpic::fusion::{
    algebra_profile, fp_dimensions, fp_dimensions_multiplicative, invertible_objects,
    permute_simples, profile_twist, validate_fusion_ring, BrauerRingElement, EndLabel,
};
use brpic::groups::{
    double_coset, double_coset_union_closure, generated_subgroup, orbits, FiniteGroup,
};
use brpic::poly::{default_width, largest_real_root, rat, QPoly};
use brpic::seqkit::{classify_vecr_extensions, realize_sequence, solve_brpic, verify_exactness};

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=8, 1usize..=8)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-9i64..=9, c), r))
}

/// `J(g, h) = Σ B_ij g_i h_j` on `(Z/2)²`, elements indexed `2·g₁ + g₂`.
fn bilinear(b: [[i64; 2]; 2]) -> impl Fn(&[usize]) -> i64 {
    move |t: &[usize]| {
        let g = [(t[0] >> 1) as i64, (t[0] & 1) as i64];
        let h = [(t[1] >> 1) as i64, (t[1] & 1) as i64];
        (0..2).map(|i| (0..2).map(|j| b[i][j] * g[i] * h[j]).sum::<i64>()).sum()
    }
}

fn klein() -> FiniteGroup {
    FiniteGroup::abelian(&[2, 2])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn smith_form_certifies(rows in matrix()) {
        let a = IntMatrix::from_rows(&rows);
        let s = smith_normal_form(&a);
        prop_assert!(s.certifies(&a));
        let nonzero: Vec<BigInt> = s.diagonal().into_iter().filter(|x| !x.is_zero()).collect();
        prop_assert_eq!(elementary_divisors(&a), nonzero.clone());
        if rows.len() == rows[0].len() {
            let prod = if nonzero.len() == rows.len() {
                nonzero.iter().fold(BigInt::from(1), |acc, x| acc * x)
            } else {
                BigInt::zero()
            };
            prop_assert_eq!(a.determinant().abs(), prod);
        }
    }

    #[test]
    fn orbits_partition_the_roots(gens in prop::collection::vec(0usize..24, 0..3)) {
        let pg = FiniteGroup::symmetric(4);
        let h = generated_subgroup(&pg.group, &gens).unwrap();
        let action = pg.natural_action();
        let orbs = orbits(&action, &h);
        let mut seen = BTreeSet::new();
        for o in &orbs {
            prop_assert_eq!(h.order() % o.len(), 0);
            for &x in o {
                prop_assert!(seen.insert(x));
                for &g in h.elements() {
                    prop_assert!(o.contains(&action.apply(g, x)));
                }
            }
        }
        prop_assert_eq!(seen.len(), 4);
    }

    #[test]
    fn double_coset_size_formula(gens in prop::collection::vec(0usize..24, 0..3), g in 0usize..24) {
        let s4 = FiniteGroup::symmetric(4).group;
        let h = generated_subgroup(&s4, &gens).unwrap();
        let conj: BTreeSet<usize> =
            h.elements().iter().map(|&x| s4.mul(s4.mul(g, x), s4.inv(g))).collect();
        let meet = h.elements().iter().filter(|x| conj.contains(x)).count();
        prop_assert_eq!(double_coset(&s4, &h, g).unwrap().len() * meet, h.order() * h.order());
    }

    /// The union of double cosets only depends on the cosets, not on the
    /// representatives chosen for them.
    #[test]
    fn union_closure_ignores_representatives(
        gens in prop::collection::vec(0usize..24, 0..2),
        reps in prop::collection::vec(0usize..24, 1..4),
        picks in prop::collection::vec(0usize..1000, 4),
    ) {
        let s4 = FiniteGroup::symmetric(4).group;
        let h = generated_subgroup(&s4, &gens).unwrap();
        let moved: Vec<usize> = reps
            .iter()
            .zip(&picks)
            .map(|(&r, &p)| {
                let coset = double_coset(&s4, &h, r).unwrap();
                coset[p % coset.len()]
            })
            .collect();
        let a = double_coset_union_closure(&s4, &h, &reps).unwrap();
        let b = double_coset_union_closure(&s4, &h, &moved).unwrap();
        prop_assert_eq!(a.elements, b.elements);
        prop_assert_eq!(a.closed, b.closed);
    }

    #[test]
    fn symmetry_survives_coboundaries(b in prop::array::uniform2(prop::array::uniform2(0i64..2)), phi in prop::array::uniform3(0i64..2)) {
        let g = klein();
        let z2 = GModule::cyclic(&g, 2);
        let phi = [0, phi[0], phi[1], phi[2]];
        let j = Cocycle::scalar(&g, &z2, 2, bilinear(b));
        let f = bilinear(b);
        let shifted = Cocycle::scalar(&g, &z2, 2, |t| f(t) + phi[t[0]] + phi[t[1]] - phi[g.mul(t[0], t[1])]);
        prop_assert_eq!(is_symmetric_cocycle(&g, &j).unwrap(), is_symmetric_cocycle(&g, &shifted).unwrap());
        prop_assert_eq!(is_symmetric_cocycle(&g, &j).unwrap(), b[0][1] == b[1][0]);
    }

    /// `class_of` is zero exactly when a brute-force search over all
    /// normalized 1-cochains finds a primitive.
    #[test]
    fn coboundary_search_matches_class(b in prop::array::uniform2(prop::array::uniform2(0i64..2)), phi in prop::array::uniform3(0i64..2)) {
        let g = klein();
        let z2 = GModule::cyclic(&g, 2);
        let f = bilinear(b);
        let phi = [0, phi[0], phi[1], phi[2]];
        let j = Cocycle::scalar(&g, &z2, 2, |t| f(t) + phi[t[0]] + phi[t[1]] - phi[g.mul(t[0], t[1])]);
        let zero = class_of(&g, &z2, &j).unwrap().iter().all(|c| c.is_zero());
        let found = (0..8u32).any(|bits| {
            let psi = [0, (bits & 1) as i64, ((bits >> 1) & 1) as i64, ((bits >> 2) & 1) as i64];
            (0..4).all(|x| (0..4).all(|y| {
                let d = psi[x] + psi[y] - psi[g.mul(x, y)];
                (j.value(&[x, y])[0] - d).rem_euclid(2) == 0
            }))
        });
        prop_assert_eq!(zero, found);
    }

    #[test]
    fn h_twist_is_an_involution(r in 0u64..6, c in 0u64..6, h in 0u64..6) {
        let terms: Vec<(EndLabel, u64)> = [(EndLabel::R, r), (EndLabel::C, c), (EndLabel::H, h)]
            .into_iter()
            .filter(|(_, m)| *m > 0)
            .collect();
        let p = BrauerRingElement::from_terms(&terms);
        let twice = profile_twist(&profile_twist(&p, &EndLabel::H).unwrap(), &EndLabel::H).unwrap();
        prop_assert_eq!(&twice, &p);
        prop_assert_eq!(profile_twist(&p, &EndLabel::R).unwrap(), p);
    }

    #[test]
    fn relabelling_preserves_invariants(which in 0usize..3, seed in any::<u64>()) {
        let data = [rep_r_q8(), z_q_minus(), z_q_plus()][which].clone();
        let r = data.rank();
        let mut perm: Vec<usize> = (0..r).collect();
        let mut s = seed;
        for i in (1..r).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let p = permute_simples(&data, &perm);
        prop_assert!(validate_fusion_ring(&p).is_ok());
        prop_assert_eq!(algebra_profile(&p), algebra_profile(&data));
        prop_assert_eq!(invertible_objects(&p).unwrap().group, invertible_objects(&data).unwrap().group);
        prop_assert!(fp_dimensions_multiplicative(&p));
    }

    #[test]
    fn largest_root_of_split_polynomial(roots in prop::collection::vec(-20i64..=20, 1..6)) {
        let p = roots.iter().fold(QPoly::from_ints(&[1]), |acc, &r| &acc * &QPoly::from_ints(&[-r, 1]));
        let top = largest_real_root(&p, &default_width()).unwrap();
        prop_assert_eq!(top.exact, Some(rat(*roots.iter().max().unwrap())));
    }

    #[test]
    fn abelian_display_round_trips(orders in prop::collection::vec(1u64..13, 0..4)) {
        let g = AbelianGroup::finite(&orders);
        prop_assert_eq!(AbelianGroup::parse(&g.to_string()).unwrap(), g.clone());
        prop_assert_eq!(g.order(), Some(orders.iter().product::<u64>()));
    }
}

/// Brute-force `|Hom(G, Z/2)|`.
fn homs_to_z2(g: &FiniteGroup) -> usize {
    let n = g.order();
    (0u32..1 << n)
        .filter(|&bits| {
            let f = |x: usize| (bits >> x) & 1;
            (0..n).all(|a| (0..n).all(|b| f(g.mul(a, b)) == (f(a) + f(b)) % 2))
        })
        .count()
}

#[test]
fn extension_count_matches_formula() {
    for g in [
        FiniteGroup::cyclic(1),
        FiniteGroup::cyclic(2),
        FiniteGroup::cyclic(3),
        FiniteGroup::cyclic(4),
        FiniteGroup::abelian(&[2, 2]),
        FiniteGroup::symmetric(3).group,
    ] {
        let h3 = cohomology(&g, &GModule::cyclic(&g, 2), 3).order().unwrap() as usize;
        let records = classify_vecr_extensions(&g).unwrap();
        assert_eq!(records.len(), homs_to_z2(&g) * h3, "order {}", g.order());
        for r in &records {
            validate_fusion_ring(&r.fusion).unwrap();
        }
    }
}

#[test]
fn fp_dimensions_at_least_one() {
    for d in [rep_r_q8(), z_q_minus(), z_q_plus()] {
        for root in fp_dimensions(&d) {
            assert!(root.upper >= rat(1));
        }
    }
}

/// `0 → A → A×I → I×K → K×Q → Q → 0` is realizable and solve_brpic agrees
/// with the order of the realized BrPic node.
#[test]
fn solve_brpic_agrees_with_realized_sequences() {
    let choices: [&[u64]; 3] = [&[], &[2], &[3]];
    for a in choices {
        for i in choices {
            for k in choices {
                for q in [&[][..], &[2][..]] {
                    let cat = |x: &[u64], y: &[u64]| [x, y].concat();
                    let group = |x: &[u64]| AbelianGroup::finite(x);
                    let s = solve_brpic(&group(a), &group(&cat(a, i)), &group(&cat(i, k)), &group(q), true).unwrap();
                    let kq: u64 = cat(k, q).iter().product();
                    assert_eq!(s.order, kq);
                    let seq = realize_sequence(a, &cat(a, i), &cat(i, k), &cat(k, q), q)
                        .unwrap_or_else(|| panic!("no realization for {a:?} {i:?} {k:?} {q:?}"));
                    assert!(verify_exactness(&seq).unwrap().exact);
                }
            }
        }
    }
}
