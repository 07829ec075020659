//! Randomized invariants: cyclotomic arithmetic and the reduction map, and
//! table-level identities on random permutation groups of small degree.

#![allow(clippy::needless_range_loop)]

use charblock::blocks::{block_partition, default_star, is_multiplicative, BrauerHom};
use charblock::charops::{induce, inner, restrict, ClassFunction, FusionMap};
use charblock::chartab::{commutator_counts, verify_table, DixonOptions, GroupData};
use charblock::classalg::{structure_constants, structure_constants_from_table};
use charblock::cyclo::{Cyclo, Fp, StarMap};
use charblock::fpg::verify_block_idempotents;
use charblock::io::{table_from_json, table_to_json};
use charblock::linalg::Scalar;
use charblock::numth::{factorize, gcd, p_split};
use charblock::permgrp::{Perm, PermGroup};
use proptest::prelude::*;

const CONDUCTORS: [u64; 10] = [1, 3, 4, 5, 7, 8, 12, 15, 21, 24];
/// Common multiple of every conductor above.
const BOUND: u64 = 840;

fn cyclo() -> impl Strategy<Value = Cyclo> {
    prop::sample::select(CONDUCTORS.to_vec()).prop_flat_map(|n| {
        prop::collection::vec(-3i64..=3, n as usize).prop_map(move |d| Cyclo::from_dense_int(n, &d))
    })
}

fn group() -> impl Strategy<Value = PermGroup> {
    (3usize..=5)
        .prop_flat_map(|n| prop::collection::vec(Just((0..n).collect::<Vec<_>>()).prop_shuffle(), 1..=2))
        .prop_map(|gens| {
            let perms: Vec<Perm> = gens.into_iter().map(|g| Perm::from_images(g).unwrap()).collect();
            PermGroup::enumerate(&perms).unwrap()
        })
}

fn data(g: PermGroup) -> GroupData {
    GroupData::new("G", g, &DixonOptions::default()).unwrap()
}

fn primes_of(n: usize) -> Vec<u64> {
    factorize(n as u64).into_iter().map(|(p, _)| p).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cyclo_ring_laws(a in cyclo(), b in cyclo(), c in cyclo()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inverse().unwrap()).is_one());
        }
    }

    #[test]
    fn cyclo_text_round_trip(a in cyclo()) {
        let back: Cyclo = a.to_string().parse().unwrap();
        prop_assert_eq!(&back, &a);
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Cyclo>(&json).unwrap(), a);
    }

    #[test]
    fn galois_action_is_a_ring_map(a in cyclo(), b in cyclo(), k in 1i64..BOUND as i64) {
        prop_assume!(gcd(k as u64, BOUND) == 1);
        prop_assert_eq!((&a * &b).galois(k).unwrap(), &a.galois(k).unwrap() * &b.galois(k).unwrap());
        prop_assert_eq!((&a + &b).galois(k).unwrap(), &a.galois(k).unwrap() + &b.galois(k).unwrap());
        prop_assert_eq!(a.complex_conjugate(), a.galois(-1).unwrap());
    }

    #[test]
    fn reduction_is_a_ring_map(a in cyclo(), b in cyclo(), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let star = StarMap::canonical(p, BOUND).unwrap();
        let (ra, rb) = (star.reduce(&a).unwrap(), star.reduce(&b).unwrap());
        prop_assert_eq!(star.reduce(&(&a * &b)).unwrap(), ra.mul(&rb));
        prop_assert_eq!(star.reduce(&(&a + &b)).unwrap(), ra.add(&rb));
        // p-power roots of unity reduce to 1
        let (pe, _) = p_split(BOUND, p);
        prop_assert!(star.reduce(&Cyclo::root_of_unity(pe, 1)).unwrap().is_one());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn table_identities(g in group()) {
        let d = data(g);
        let t = &d.table;
        verify_table(t).unwrap();
        prop_assert_eq!(structure_constants_from_table(t).unwrap(), d.structure.clone());
        let grp = &d.group;
        let mut hits = vec![0u64; grp.order()];
        for a in 0..grp.order() {
            for b in 0..grp.order() {
                let c = grp.mul_idx(grp.mul_idx(grp.inv_idx(a), grp.inv_idx(b)), grp.mul_idx(a, b));
                hits[c] += 1;
            }
        }
        let brute: Vec<u64> = d.classes.reps().iter().map(|&r| hits[r]).collect();
        prop_assert_eq!(commutator_counts(t).unwrap(), brute);
        let back = table_from_json(&table_to_json(t)).unwrap();
        prop_assert_eq!(table_to_json(&back), table_to_json(t));
    }

    #[test]
    fn block_invariants(g in group()) {
        let d = data(g);
        let t = &d.table;
        for p in primes_of(d.group.order()) {
            let part = block_partition(t, &default_star(t, p).unwrap()).unwrap();
            for b in &part.blocks {
                prop_assert!(is_multiplicative(&b.lambda, |k, l, m| d.structure.get(k, l, m)));
            }
            let ibr: usize = part.blocks.iter().map(|b| b.ibr_count).sum();
            prop_assert_eq!(ibr, t.p_regular_classes(p).len());
            for star in StarMap::all(p, t.exponent()).unwrap() {
                prop_assert_eq!(block_partition(t, &star).unwrap().irr_sets(), part.irr_sets());
            }
            let rep = verify_block_idempotents(&d, &part).unwrap();
            prop_assert_eq!(rep.blocks, part.num_blocks());
        }
    }

    #[test]
    fn reciprocity_with_cyclic_subgroups(g in group(), pick in any::<prop::sample::Index>(), coeffs in prop::collection::vec(-2i64..=2, 12)) {
        let d = data(g);
        let x = pick.index(d.group.order());
        let h = d.subgroup("H", &d.group.closure(&[x]), &DixonOptions::default()).unwrap();
        let fusion = FusionMap::between(&h, &d).unwrap();
        let cycle = |n: usize| (0..n).map(|i| coeffs[i % coeffs.len()]).collect::<Vec<_>>();
        let phi = ClassFunction::combination(&h.table, &cycle(h.table.num_irr()));
        let psi = ClassFunction::combination(&d.table, &cycle(d.table.num_irr() + 1)[1..]);
        let lhs = inner(&induce(&phi, &fusion, &d.table).unwrap(), &psi).unwrap();
        let rhs = inner(&phi, &restrict(&psi, &fusion, &h.table).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn kernel_of_induced_is_core(g in group(), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>(), i in any::<prop::sample::Index>()) {
        let d = data(g);
        let n = d.group.order();
        let sub = d.group.closure(&[a.index(n), b.index(n)]);
        let h = d.subgroup("H", &sub, &DixonOptions::default()).unwrap();
        let fusion = FusionMap::between(&h, &d).unwrap();
        let phi = ClassFunction::irreducible(&h.table, i.index(h.table.num_irr()));
        let ker_h: Vec<usize> = phi.kernel();
        let in_ker = |y: usize| {
            let c = h.classes.class_of_perm(&h.group, d.group.element(y));
            c.is_some_and(|c| ker_h.contains(&c))
        };
        let core: Vec<usize> = (0..n).filter(|&y| (0..n).all(|z| in_ker(d.group.conj_idx(y, z)))).collect();
        let induced = induce(&phi, &fusion, &d.table).unwrap();
        let ker_g: Vec<usize> = (0..n).filter(|&y| induced.kernel().contains(&d.classes.class_of(y))).collect();
        prop_assert_eq!(ker_g, core);
    }

    #[test]
    fn brauer_homomorphism_is_multiplicative(g in group(), pick in any::<prop::sample::Index>()) {
        let d = data(g);
        let x = pick.index(d.group.order());
        let ord = d.group.element(x).order();
        prop_assume!(ord > 1);
        let p = factorize(ord)[0].0;
        // the p-part of x generates a p-subgroup
        let xp = d.group.element(x).pow((ord / p_split(ord, p).0) as i64);
        let sub = d.group.closure(&[d.group.index_of(&xp).unwrap()]);
        let hom = BrauerHom::new(&d, p, &sub).unwrap();
        let ns = structure_constants(&hom.normalizer, &hom.classes);
        let r = d.classes.num_classes();
        let rn = hom.classes.num_classes();
        let zero = Fp::from_u64(0, p);
        let unit = |k: usize| (0..r).map(|j| Fp::from_u64(u64::from(j == k), p)).collect::<Vec<_>>();
        for k in 0..r {
            for l in 0..r {
                let prod: Vec<Fp> = (0..r).map(|m| Fp::from_u64(d.structure.get(k, l, m), p)).collect();
                let lhs = hom.apply(&prod);
                let (u, v) = (hom.apply(&unit(k)), hom.apply(&unit(l)));
                let mut rhs = vec![zero; rn];
                for a in 0..rn {
                    for b in 0..rn {
                        let uv = u[a].mul(&v[b]);
                        if uv.is_zero() {
                            continue;
                        }
                        for (c, out) in rhs.iter_mut().enumerate() {
                            *out = out.add(&uv.mul(&Fp::from_u64(ns.get(a, b, c), p)));
                        }
                    }
                }
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
