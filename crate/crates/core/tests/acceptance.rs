//! Acceptance suite: one PASS/FAIL line per criterion. Every comparison is
//! exact (zero tolerance); the only numeric limit is the per-group time
//! budget for computing a character table.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use charblock::blocks::{
    block_local_data, block_partition, decomposition_and_cartan, default_star, elementary_decomposition,
    higher_decomposition, induced_block, robinson_block_count, InducedBlock,
};
use charblock::charops::{induce, inner, restrict, ClassFunction, FusionMap};
use charblock::chartab::{
    commutator_counts, equivalent_tables, verify_burnside, verify_orthogonality, CharacterTable, GroupData,
};
use charblock::cyclo::{Cyclo, FqElem, StarMap};
use charblock::fpg::{center_radical, verify_block_idempotents};
use charblock::numth::p_split;
use charblock::permgrp::{p_core, sylow_p, Subgroup};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::decomposition::KNOWN;
use common::{golden_brauer, golden_table, group, primes, sub_data, subgroup, GOLDEN};

/// Wall-clock budget for one character table.
const TABLE_TIME_LIMIT: Duration = Duration::from_secs(60);
/// Random character pairs per subgroup embedding.
const RECIPROCITY_PAIRS: usize = 100;
/// Random characters are integer combinations of irreducibles with
/// coefficients in `-COEFF_RANGE..=COEFF_RANGE`.
const COEFF_RANGE: i64 = 3;
const SEED: u64 = 0x5eed;
const ALL_PRIMES: [u64; 4] = [2, 3, 5, 7];

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<T: std::fmt::Display>(x: T) -> String {
    x.to_string()
}

/// Prime-field value of a reduced central character.
fn fp_value(x: &FqElem) -> Option<u64> {
    x.coeffs()[1..].iter().all(|&c| c == 0).then(|| x.coeffs()[0])
}

fn fp_row(v: &[FqElem]) -> Option<Vec<u64>> {
    v.iter().map(fp_value).collect()
}

struct Groups(Vec<GroupData>);

impl Groups {
    fn get(&self, name: &str) -> &GroupData {
        self.0.iter().find(|g| g.table.name() == name).expect("golden group")
    }
}

fn golden_tables(groups: &mut Vec<GroupData>) -> Outcome {
    let mut details = Vec::new();
    let mut failures = Vec::new();
    for name in GOLDEN {
        let start = Instant::now();
        let g = group(name);
        let elapsed = start.elapsed();
        match equivalent_tables(&g.table, &golden_table(name)) {
            None => failures.push(format!("{name}: computed table differs from the published one")),
            Some(_) if elapsed >= TABLE_TIME_LIMIT => failures.push(format!("{name}: took {elapsed:?}")),
            Some(m) => details.push(format!("{name} {:.2}s galois {}", elapsed.as_secs_f64(), m.galois)),
        }
        groups.push(g);
    }
    if failures.is_empty() {
        Ok(details.join(", "))
    } else {
        Err(failures.join("; "))
    }
}

fn orthogonality(groups: &Groups) -> Outcome {
    for g in &groups.0 {
        let t = &g.table;
        let name = t.name();
        let sum: u64 = t.degrees().iter().map(|d| d * d).sum();
        ensure(sum == t.order(), || format!("{name}: sum of squared degrees {sum}"))?;
        verify_burnside(t).map_err(|x| format!("{name}: {x}"))?;
        verify_orthogonality(t).map_err(|x| format!("{name}: {x}"))?;
    }
    Ok(format!("{} tables, both relations exact", groups.0.len()))
}

fn blocks() -> Outcome {
    let part = |name: &str, p| {
        let t = golden_table(name);
        let star = default_star(&t, p).map_err(e)?;
        block_partition(&t, &star).map_err(e)
    };
    let one_based = |sets: Vec<Vec<usize>>| -> Vec<Vec<usize>> {
        sets.into_iter().map(|s| s.into_iter().map(|i| i + 1).collect()).collect()
    };

    let s3 = part("s3", 2)?;
    let lambdas: Vec<Option<Vec<u64>>> = s3.blocks.iter().map(|b| fp_row(&b.lambda)).collect();
    ensure(lambdas == vec![Some(vec![1, 1, 0]), Some(vec![1, 0, 1])], || {
        format!("S3 mod 2: lambda rows {lambdas:?}")
    })?;
    let defects: Vec<u32> = s3.blocks.iter().map(|b| b.defect).collect();
    ensure(defects == vec![1, 0], || format!("S3 mod 2: defects {defects:?}"))?;
    ensure(part("s3", 3)?.num_blocks() == 1, || "S3 mod 3: more than one block".into())?;

    let a5_2 = part("a5", 2)?;
    let sets = one_based(a5_2.irr_sets());
    ensure(sets == vec![vec![1, 2, 3, 5], vec![4]], || format!("A5 mod 2: {sets:?}"))?;
    let defects: Vec<u32> = a5_2.blocks.iter().map(|b| b.defect).collect();
    ensure(defects == vec![2, 0], || format!("A5 mod 2: defects {defects:?}"))?;
    let sets = one_based(part("a5", 3)?.irr_sets());
    ensure(sets == vec![vec![1, 4, 5], vec![2], vec![3]], || format!("A5 mod 3: {sets:?}"))?;
    let sets = one_based(part("a5", 5)?.irr_sets());
    ensure(sets == vec![vec![1, 2, 3, 4], vec![5]], || format!("A5 mod 5: {sets:?}"))?;
    Ok("S3 mod 2, 3 and A5 mod 2, 3, 5 as published".into())
}

/// A column permutation `perm` with `computed[i][perm[j]] = known[i][j]`.
fn column_match(computed: &[Vec<u64>], known: &[&[u64]]) -> Option<Vec<usize>> {
    fn extend(c: &[Vec<u64>], k: &[&[u64]], used: &mut Vec<bool>, perm: &mut Vec<usize>) -> bool {
        let j = perm.len();
        if j == used.len() {
            return true;
        }
        for col in 0..used.len() {
            if !used[col] && c.iter().zip(k).all(|(cr, kr)| cr[col] == kr[j]) {
                used[col] = true;
                perm.push(col);
                if extend(c, k, used, perm) {
                    return true;
                }
                perm.pop();
                used[col] = false;
            }
        }
        false
    }
    let n = computed.first()?.len();
    if computed.len() != known.len() || known.iter().any(|r| r.len() != n) {
        return None;
    }
    let mut perm = Vec::new();
    extend(computed, known, &mut vec![false; n], &mut perm).then_some(perm)
}

fn decomposition_matrices() -> Outcome {
    for k in KNOWN {
        let tag = format!("{} mod {}", k.group, k.prime);
        let t = golden_table(k.group);
        let data = decomposition_and_cartan(&t, &golden_brauer(k.group, k.prime)).map_err(|x| format!("{tag}: {x}"))?;
        let perm = column_match(&data.decomposition, k.d)
            .ok_or_else(|| format!("{tag}: D = {:?} is not a column permutation of {:?}", data.decomposition, k.d))?;
        for (i, row) in k.c.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                ensure(data.cartan[perm[i]][perm[j]] == v, || format!("{tag}: C = {:?}", data.cartan))?;
            }
        }
        let expected: BigInt = t
            .p_regular_classes(k.prime)
            .iter()
            .map(|&c| BigInt::from(p_split(t.class(c).centralizer, k.prime).0))
            .product();
        ensure(data.cartan_det == expected, || {
            format!("{tag}: det C = {}, expected {expected}", data.cartan_det)
        })?;
    }
    Ok(format!("{} (group, prime) pairs, D and C up to column order, det C exact", KNOWN.len()))
}

fn oracle(groups: &Groups) -> Outcome {
    let mut pairs = 0;
    for g in &groups.0 {
        for &p in primes(g.table.name()) {
            let tag = format!("{} mod {p}", g.table.name());
            let part = block_partition(&g.table, &default_star(&g.table, p).map_err(e)?).map_err(e)?;
            let rep = verify_block_idempotents(g, &part).map_err(|x| format!("{tag}: {x}"))?;
            ensure(rep.blocks == part.num_blocks(), || format!("{tag}: block count"))?;
            center_radical(g, &part).map_err(|x| format!("{tag}: {x}"))?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} (group, prime) pairs, zero failures"))
}

fn induced_blocks(groups: &Groups) -> Outcome {
    let check = |g: &GroupData, h: &GroupData| {
        let gpart = block_partition(&g.table, &default_star(&g.table, 2).map_err(e)?).map_err(e)?;
        let hpart = block_partition(&h.table, &gpart.star).map_err(e)?;
        let r = induced_block(g, &gpart, h, &hpart, 0).map_err(e)?;
        Ok::<_, String>((gpart, r))
    };
    let s3 = groups.get("s3");
    let a3 = sub_data(s3, "A3", &subgroup(s3, 3, &[&[&[1, 2, 3]]]));
    let (_, r) = check(s3, &a3)?;
    ensure(r.result == InducedBlock::NotMultiplicative, || format!("S3/A3: {:?}", r.result))?;

    let a5 = groups.get("a5");
    let a4 = sub_data(a5, "A4", &subgroup(a5, 5, &[&[&[1, 2], &[3, 4]], &[&[1, 2, 3]]]));
    let (gpart, r) = check(a5, &a4)?;
    let b = r.result.block().ok_or_else(|| format!("A5/A4: {:?}", r.result))?;
    ensure(gpart.blocks[b].principal, || "A5/A4: not the principal block".into())?;
    let lambda = fp_row(&r.lambda);
    ensure(lambda == Some(vec![1, 1, 0, 0, 0]), || format!("A5/A4: lambda {lambda:?}"))?;
    Ok("S3/A3 undefined; A5/A4 principal with lambda (1,1,0,0,0)".into())
}

fn random_character<'t>(t: &'t CharacterTable, rng: &mut ChaCha8Rng) -> ClassFunction<'t> {
    let coeffs: Vec<i64> = (0..t.num_irr()).map(|_| rng.gen_range(-COEFF_RANGE..=COEFF_RANGE)).collect();
    ClassFunction::combination(t, &coeffs)
}

fn embeddings(groups: &Groups) -> Vec<(String, &GroupData, GroupData)> {
    let mut out = Vec::new();
    let make = |g: &GroupData, name: &str, s: Subgroup| {
        (format!("{name} < {}", g.table.name()), sub_data(g, name, &s))
    };
    let s3 = groups.get("s3");
    let a4 = groups.get("a4");
    let s4 = groups.get("s4");
    let a5 = groups.get("a5");
    let explicit: Vec<(&GroupData, &str, Subgroup)> = vec![
        (s3, "A3", subgroup(s3, 3, &[&[&[1, 2, 3]]])),
        (s3, "C2", subgroup(s3, 3, &[&[&[1, 2]]])),
        (a4, "V4", subgroup(a4, 4, &[&[&[1, 2], &[3, 4]], &[&[1, 3], &[2, 4]]])),
        (a4, "C3", subgroup(a4, 4, &[&[&[1, 2, 3]]])),
        (s4, "A4", subgroup(s4, 4, &[&[&[1, 2], &[3, 4]], &[&[1, 2, 3]]])),
        (s4, "S3", subgroup(s4, 4, &[&[&[1, 2]], &[&[1, 2, 3]]])),
        (s4, "D8", subgroup(s4, 4, &[&[&[1, 2, 3, 4]], &[&[1, 3]]])),
        (a5, "A4", subgroup(a5, 5, &[&[&[1, 2], &[3, 4]], &[&[1, 2, 3]]])),
        (a5, "D10", subgroup(a5, 5, &[&[&[1, 2, 3, 4, 5]], &[&[2, 5], &[3, 4]]])),
        (a5, "S3", subgroup(a5, 5, &[&[&[1, 2, 3]], &[&[1, 2], &[4, 5]]])),
    ];
    for (g, name, s) in explicit {
        let (tag, h) = make(g, name, s);
        out.push((tag, g, h));
    }
    for (name, p) in [("sl23", 2), ("sl23", 3), ("psl27", 7), ("psl27", 2)] {
        let g = groups.get(name);
        let syl = sylow_p(&g.group, &g.group.whole(), p).expect("prime");
        let (tag, h) = make(g, &format!("N(P{p})"), g.group.normalizer(&syl));
        out.push((tag, g, h));
        let (tag, h) = make(g, &format!("P{p}"), syl);
        out.push((tag, g, h));
    }
    out
}

fn frobenius_reciprocity(groups: &Groups, rng: &mut ChaCha8Rng) -> Outcome {
    let embeddings = embeddings(groups);
    for (tag, g, h) in &embeddings {
        let fusion = FusionMap::between(h, g).map_err(|x| format!("{tag}: {x}"))?;
        for _ in 0..RECIPROCITY_PAIRS {
            let phi = random_character(&h.table, rng);
            let psi = random_character(&g.table, rng);
            let lhs = inner(&induce(&phi, &fusion, &g.table).map_err(e)?, &psi).map_err(e)?;
            let rhs = inner(&phi, &restrict(&psi, &fusion, &h.table).map_err(e)?).map_err(e)?;
            ensure(lhs == rhs, || format!("{tag}: {lhs} != {rhs}"))?;
        }
    }
    Ok(format!("reciprocity {} embeddings x {RECIPROCITY_PAIRS}", embeddings.len()))
}

fn transitivity(groups: &Groups) -> Outcome {
    let s4 = groups.get("s4");
    let chains: [(&str, Subgroup, &str, Subgroup); 2] = [
        (
            "V4",
            subgroup(s4, 4, &[&[&[1, 2], &[3, 4]], &[&[1, 3], &[2, 4]]]),
            "A4",
            subgroup(s4, 4, &[&[&[1, 2], &[3, 4]], &[&[1, 2, 3]]]),
        ),
        (
            "C2",
            subgroup(s4, 4, &[&[&[1, 3]]]),
            "D8",
            subgroup(s4, 4, &[&[&[1, 2, 3, 4]], &[&[1, 3]]]),
        ),
    ];
    for (kn, ks, hn, hs) in chains {
        let (k, h) = (sub_data(s4, kn, &ks), sub_data(s4, hn, &hs));
        let (kh, hg, kg) = (
            FusionMap::between(&k, &h).map_err(e)?,
            FusionMap::between(&h, s4).map_err(e)?,
            FusionMap::between(&k, s4).map_err(e)?,
        );
        for i in 0..k.table.num_irr() {
            let phi = ClassFunction::irreducible(&k.table, i);
            let two_step = induce(&induce(&phi, &kh, &h.table).map_err(e)?, &hg, &s4.table).map_err(e)?;
            let direct = induce(&phi, &kg, &s4.table).map_err(e)?;
            ensure(two_step.values() == direct.values(), || format!("{kn} < {hn} < S4: chi_{}", i + 1))?;
        }
    }
    Ok("transitivity on V4<A4<S4 and C2<D8<S4".into())
}

/// `(phi^G)_H = sum over double cosets HxK of ((phi^x) restricted to H ∩ xKx^-1)^H`.
fn mackey(groups: &Groups) -> Outcome {
    let g = groups.get("s4");
    let ks = subgroup(g, 4, &[&[&[1, 2]], &[&[1, 2, 3]]]);
    let k = sub_data(g, "S3", &ks);
    let kg = FusionMap::between(&k, g).map_err(e)?;
    let hs_list = [
        ("S3", ks.clone()),
        ("A4", subgroup(g, 4, &[&[&[1, 2], &[3, 4]], &[&[1, 2, 3]]])),
        ("D8", subgroup(g, 4, &[&[&[1, 2, 3, 4]], &[&[1, 3]]])),
    ];
    let grp = &g.group;
    for (hn, hs) in hs_list {
        let h = sub_data(g, hn, &hs);
        let hg = FusionMap::between(&h, g).map_err(e)?;
        let mut seen = vec![false; grp.order()];
        let mut pieces = Vec::new();
        for x in 0..grp.order() {
            if seen[x] {
                continue;
            }
            for &a in hs.members() {
                for &b in ks.members() {
                    seen[grp.mul_idx(grp.mul_idx(a, x), b)] = true;
                }
            }
            let xinv = grp.inv_idx(x);
            let conj_k: BTreeSet<usize> = ks.members().iter().map(|&y| grp.mul_idx(grp.mul_idx(x, y), xinv)).collect();
            let meet: Vec<usize> = hs.members().iter().copied().filter(|y| conj_k.contains(y)).collect();
            let l = sub_data(g, "L", &Subgroup::from_members(grp, meet));
            pieces.push((x, l));
        }
        for i in 0..k.table.num_irr() {
            let phi = ClassFunction::irreducible(&k.table, i);
            let lhs = restrict(&induce(&phi, &kg, &g.table).map_err(e)?, &hg, &h.table).map_err(e)?;
            let mut rhs = ClassFunction::zero(&h.table);
            for (x, l) in &pieces {
                let xp = grp.element(*x);
                let values: Vec<Cyclo> = (0..l.classes.num_classes())
                    .map(|c| {
                        // x^-1 y x lies in K
                        let y = l.classes.rep(c).conj(xp);
                        let kc = k.classes.class_of_perm(&k.group, &y).expect("conjugate lies in K");
                        phi.value(kc).clone()
                    })
                    .collect();
                let twisted = ClassFunction::new(&l.table, values).map_err(e)?;
                let lh = FusionMap::between(l, &h).map_err(e)?;
                rhs = rhs.add(&induce(&twisted, &lh, &h.table).map_err(e)?).map_err(e)?;
            }
            ensure(lhs.values() == rhs.values(), || format!("Mackey fails for H = {hn}, chi_{}", i + 1))?;
        }
    }
    Ok("Mackey for S3 < S4 against S3, A4, D8".into())
}

fn commutators(groups: &Groups) -> Outcome {
    for name in ["s3", "a4", "s4"] {
        let g = groups.get(name);
        let grp = &g.group;
        let n = grp.order();
        let mut hits = vec![0u64; n];
        for a in 0..n {
            for b in 0..n {
                let ab = grp.mul_idx(a, b);
                let c = grp.mul_idx(grp.mul_idx(grp.inv_idx(a), grp.inv_idx(b)), ab);
                hits[c] += 1;
            }
        }
        let brute: Vec<u64> = g.classes.reps().iter().map(|&r| hits[r]).collect();
        let kappa = commutator_counts(&g.table).map_err(e)?;
        ensure(brute == kappa, || format!("{name}: brute force {brute:?}, table {kappa:?}"))?;
    }
    Ok("commutator counts for S3, A4, S4".into())
}

fn block_orthogonality(groups: &Groups) -> Outcome {
    let mut checks = 0usize;
    for g in &groups.0 {
        let t = &g.table;
        for p in ALL_PRIMES {
            let part = block_partition(t, &default_star(t, p).map_err(e)?).map_err(e)?;
            let sections = g.classes.p_section_partition(p).map_err(e)?;
            let mut section_of = vec![0; t.num_classes()];
            for (s, cls) in sections.iter().enumerate() {
                for &c in cls {
                    section_of[c] = s;
                }
            }
            let regular = |k: usize| t.class(k).order % p != 0;
            for b in &part.blocks {
                for x in 0..t.num_classes() {
                    for y in 0..t.num_classes() {
                        let weak = regular(x) && !regular(y);
                        let full = section_of[x] != section_of[y];
                        if !weak && !full {
                            continue;
                        }
                        let s: Cyclo = b
                            .irr
                            .iter()
                            .map(|&i| t.value(i, x) * &t.value(i, y).complex_conjugate())
                            .sum();
                        ensure(s.is_zero(), || {
                            format!("{} mod {p}: block sum over classes {x}, {y} is {s}", t.name())
                        })?;
                        checks += 1;
                    }
                }
            }
        }
    }
    Ok(format!("block orthogonality {checks} sums"))
}

fn star_invariance(groups: &Groups) -> Outcome {
    let mut maps = 0;
    for g in &groups.0 {
        let t = &g.table;
        for p in ALL_PRIMES {
            let stars = StarMap::all(p, t.exponent()).map_err(e)?;
            let first = block_partition(t, &stars[0]).map_err(e)?.irr_sets();
            for s in &stars[1..] {
                let sets = block_partition(t, s).map_err(e)?.irr_sets();
                ensure(sets == first, || format!("{} mod {p}: factor {:?} changes the blocks", t.name(), s.factor()))?;
            }
            maps += stars.len();
        }
    }
    Ok(format!("star invariance over {maps} factors"))
}

fn defect_zero_vanishing(groups: &Groups) -> Outcome {
    let mut count = 0;
    for g in &groups.0 {
        let t = &g.table;
        for &p in primes(t.name()) {
            let part = block_partition(t, &default_star(t, p).map_err(e)?).map_err(e)?;
            for b in part.blocks.iter().filter(|b| b.defect == 0) {
                for &i in &b.irr {
                    for k in (0..t.num_classes()).filter(|&k| t.class(k).order % p == 0) {
                        ensure(t.value(i, k).is_zero(), || {
                            format!("{} mod {p}: defect-zero chi_{} is nonzero at {}", t.name(), i + 1, t.class(k).name)
                        })?;
                    }
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} defect-zero blocks vanish off p-regular classes"))
}

fn second_main_theorem(groups: &Groups) -> Outcome {
    let g = groups.get("a5");
    let t = &g.table;
    let gpart = block_partition(t, &default_star(t, 2).map_err(e)?).map_err(e)?;
    let k2a = t.class_index("2a").ok_or("no class 2a")?;
    let x = g.classes.reps()[k2a];
    let c = sub_data(g, "C", &g.group.centralizer(x));
    let c_decomp = elementary_decomposition(&c.table, 2).ok_or("centralizer is not a 2-group")?;
    let hd = higher_decomposition(g, &gpart, x, &c, &c_decomp).map_err(e)?;
    let chi4 = (0..t.num_irr()).find(|&i| t.degree(i) == 4).ok_or("no degree 4 character")?;
    ensure(hd.values[chi4].iter().all(Cyclo::is_zero), || format!("d^x row of chi_4: {:?}", hd.values[chi4]))?;
    Ok("d^x(chi_4) = 0 at 2a of A5".into())
}

fn properties(groups: &Groups) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let parts = [
        frobenius_reciprocity(groups, &mut rng)?,
        transitivity(groups)?,
        mackey(groups)?,
        commutators(groups)?,
        block_orthogonality(groups)?,
        star_invariance(groups)?,
        defect_zero_vanishing(groups)?,
        second_main_theorem(groups)?,
    ];
    Ok(parts.join("; "))
}

fn robinson(groups: &Groups) -> Outcome {
    let s3 = groups.get("s3");
    let a3 = subgroup(s3, 3, &[&[&[1, 2, 3]]]);
    let n = robinson_block_count(s3, 3, &a3).map_err(e)?.rank;
    ensure(n == 1, || format!("S3 mod 3 with D = A3: {n} blocks"))?;

    let a4 = groups.get("a4");
    let v4 = subgroup(a4, 4, &[&[&[1, 2], &[3, 4]], &[&[1, 3], &[2, 4]]]);
    let n = robinson_block_count(a4, 2, &v4).map_err(e)?.rank;
    let part = block_partition(&a4.table, &default_star(&a4.table, 2).map_err(e)?).map_err(e)?;
    let local = block_local_data(a4, &part).map_err(e)?;
    let direct = local.iter().filter(|l| l.defect_group.members() == v4.members()).count() as u64;
    ensure(n == direct && n == 1, || format!("A4 mod 2 with D = V4: count {n}, partition {direct}"))?;

    // D = 1 counts the blocks of defect zero; D = O_p(G) is checked against
    // the defect groups found from the idempotents
    let mut pairs = 0;
    for g in &groups.0 {
        for &p in primes(g.table.name()) {
            let tag = format!("{} mod {p}", g.table.name());
            let part = block_partition(&g.table, &default_star(&g.table, p).map_err(e)?).map_err(e)?;
            let trivial = g.group.closure(&[]);
            let n = robinson_block_count(g, p, &trivial).map_err(e)?.rank;
            let zero = part.blocks.iter().filter(|b| b.defect == 0).count() as u64;
            ensure(n == zero, || format!("{tag}: D = 1 gives {n}, partition has {zero}"))?;
            let core = p_core(&g.group, p).map_err(e)?;
            let n = robinson_block_count(g, p, &core).map_err(e)?.rank;
            let local = block_local_data(g, &part).map_err(e)?;
            let direct = local.iter().filter(|l| l.defect_group.members() == core.members()).count() as u64;
            ensure(n == direct, || format!("{tag}: D = O_p(G) gives {n}, partition has {direct}"))?;
            pairs += 1;
        }
    }
    Ok(format!("S3/A3 gives 1; A4/V4 gives 1 = partition count; D = 1 and D = O_p(G) agree with the partition for {pairs} pairs"))
}

fn report(n: usize, title: &str, outcome: &Outcome) -> bool {
    match outcome {
        Ok(detail) => println!("criterion {n} PASS  {title}: {detail}"),
        Err(why) => println!("criterion {n} FAIL  {title}: {why}"),
    }
    outcome.is_ok()
}

fn main() {
    println!("acceptance (exact arithmetic, zero tolerance; table time limit {TABLE_TIME_LIMIT:?})");
    let mut computed = Vec::new();
    let c1 = golden_tables(&mut computed);
    let groups = Groups(computed);
    let results = [
        (1, "golden tables", c1),
        (2, "Burnside and orthogonality", orthogonality(&groups)),
        (3, "block partitions", blocks()),
        (4, "decomposition and Cartan matrices", decomposition_matrices()),
        (5, "group algebra oracle", oracle(&groups)),
        (6, "induced blocks", induced_blocks(&groups)),
        (7, "property suites", properties(&groups)),
        (8, "Robinson block counts", robinson(&groups)),
    ];
    let mut ok = true;
    for (n, title, outcome) in &results {
        ok &= report(*n, title, outcome);
    }
    if !ok {
        std::process::exit(1);
    }
}
