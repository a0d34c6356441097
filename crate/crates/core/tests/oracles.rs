//! Checks against brute-force computations that share no code with the crate.

use std::collections::{BTreeMap, BTreeSet};

use gr33_core::pattern::{selector_positions, small_grassmannian_pattern};
use gr33_core::{
    dim_sl3, enright_shelton_reduce, lift_status, p_dominant_weights_of, pattern_of, pieri_sl3, ArrowKind,
    InfChar, LiftVerdict, PDomWeight, Singularity,
};

/// Every multiset of six values in `0..=max` containing 0, each value at most
/// twice, as descending arrays.
fn characters(max: i64) -> Vec<[i64; 6]> {
    fn go(max: i64, start: i64, acc: &mut Vec<i64>, out: &mut Vec<[i64; 6]>) {
        if acc.len() == 6 {
            if acc.contains(&0) {
                let mut v = acc.clone();
                v.sort_unstable_by(|a, b| b.cmp(a));
                out.push([v[0], v[1], v[2], v[3], v[4], v[5]]);
            }
            return;
        }
        for x in start..=max {
            if acc.iter().filter(|&&y| y == x).count() < 2 {
                acc.push(x);
                go(max, x, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(max, 0, &mut Vec::new(), &mut out);
    out
}

/// All 720 orderings, kept when both triples strictly decrease.
fn brute_p_dominant(values: [i64; 6]) -> BTreeSet<[i64; 6]> {
    let mut out = BTreeSet::new();
    let mut idx = [0usize, 1, 2, 3, 4, 5];
    permute(&mut idx, 0, &mut |p| {
        let w: [i64; 6] = std::array::from_fn(|i| values[p[i]]);
        if w[0] > w[1] && w[1] > w[2] && w[3] > w[4] && w[4] > w[5] {
            out.insert(w);
        }
    });
    out
}

fn permute(v: &mut [usize; 6], k: usize, f: &mut impl FnMut(&[usize; 6])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, f);
        v.swap(k, i);
    }
}

#[test]
fn p_dominant_weights_match_permutation_search() {
    let chars = characters(8);
    assert_eq!(chars.len(), 770);
    for values in chars {
        let ic = InfChar::new(values).unwrap();
        let ours: BTreeSet<[i64; 6]> = p_dominant_weights_of(&ic).iter().map(|w| w.as_weight6().0).collect();
        assert_eq!(ours, brute_p_dominant(values), "{ic}");
        let expected = match ic.singularity() {
            Singularity::Regular => 20,
            Singularity::Sing1 => 6,
            Singularity::Sing2 => 2,
            Singularity::Sing3Plus => 1,
        };
        assert_eq!(ours.len(), expected);
    }
}

/// Gale order on k-subsets of `0..n` (as index sets, larger index = larger
/// value): `A ≤ B` iff the sorted entries compare elementwise.
fn gale_leq(a: &[usize], b: &[usize]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m & (1 << i) != 0).collect())
        .collect()
}

fn brute_covers(n: usize, k: usize) -> BTreeSet<(Vec<usize>, Vec<usize>)> {
    let all = subsets(n, k);
    let mut out = BTreeSet::new();
    for a in &all {
        for b in &all {
            if a == b || !gale_leq(a, b) {
                continue;
            }
            let between = all
                .iter()
                .any(|c| c != a && c != b && gale_leq(a, c) && gale_leq(c, b));
            if !between {
                out.insert((a.clone(), b.clone()));
            }
        }
    }
    out
}

#[test]
fn bruhat_cover_totals() {
    assert_eq!(brute_covers(6, 3).len(), 30);
    assert_eq!(brute_covers(4, 2).len(), 6);
}

#[test]
fn exhaustive_pattern_shapes() {
    let covers3 = brute_covers(6, 3);
    for values in characters(8) {
        let ic = InfChar::new(values).unwrap();
        let p = pattern_of(&ic);
        assert!(p.is_acyclic());
        for a in &p.arrows {
            assert!(a.order > 0);
            assert_eq!(a.order, gr33_core::hom_order(&a.src, &a.tgt).unwrap());
            assert!(p.contains_node(&a.src) && p.contains_node(&a.tgt));
            let status = lift_status(a, &ic).unwrap();
            if a.order <= 2 || ic.singularity().is_singular() {
                assert_eq!(status.verdict(), LiftVerdict::Lifts);
            }
        }
        let shape = (p.nodes.len(), p.standard_count(), p.nonstandard_count());
        match ic.singularity() {
            Singularity::Regular => {
                assert_eq!(shape, (20, 30, 8));
                // standard arrows are exactly the Gale covers, read on value
                // indices counted from the smallest value
                let idx = |w: &PDomWeight| {
                    let pos = selector_positions(&values, w).unwrap();
                    let mut v: Vec<usize> = pos.iter().map(|p| 5 - p).collect();
                    v.sort_unstable();
                    v
                };
                let ours: BTreeSet<_> = p
                    .arrows
                    .iter()
                    .filter(|a| a.kind.is_standard())
                    .map(|a| (idx(&a.src), idx(&a.tgt)))
                    .collect();
                assert_eq!(ours, covers3);
                let mut counts = BTreeMap::new();
                for a in &p.arrows {
                    *counts.entry(lift_status(a, &ic).unwrap().verdict().as_str()).or_insert(0) += 1;
                }
                assert_eq!(counts["lifts"], 35);
                assert_eq!(counts["no-lift"], 2);
                assert_eq!(counts["unknown"], 1);
            }
            Singularity::Sing1 => assert_eq!(shape, (6, 6, 1)),
            Singularity::Sing2 => assert_eq!(shape, (2, 1, 0)),
            Singularity::Sing3Plus => assert_eq!(shape, (1, 0, 0)),
        }
    }
}

#[test]
fn singular_patterns_are_small_grassmannians_with_repeats_inserted() {
    for values in characters(7) {
        let ic = InfChar::new(values).unwrap();
        if !matches!(ic.singularity(), Singularity::Sing1 | Singularity::Sing2) {
            continue;
        }
        let p = pattern_of(&ic);
        let rep = ic.repeated_values();
        let (nodes, arrows) = small_grassmannian_pattern(&ic.simple_values());
        let lifted: Vec<PDomWeight> = nodes.iter().map(|n| n.insert(&rep)).collect();
        let ours: Vec<PDomWeight> = p.nodes.iter().map(|n| n.weight).collect();
        let mut lifted_sorted = lifted.clone();
        lifted_sorted.sort();
        assert_eq!(ours, lifted_sorted, "{ic}");
        for n in &nodes {
            assert_eq!(&enright_shelton_reduce(&n.insert(&rep)).unwrap(), n);
        }
        // in Gr(1,1) the single arrow is standard
        assert_eq!(arrows.len(), p.arrows.len());
        for a in arrows {
            let hit = p.find_arrow(&a.src.insert(&rep), &a.tgt.insert(&rep)).unwrap();
            assert_eq!(hit.kind, a.kind);
        }
    }
}

/// Number of Gelfand–Tsetlin patterns with top row `λ` (gl(3)).
fn gt_count(l: [i64; 3]) -> i64 {
    let mut n = 0;
    for m1 in l[1]..=l[0] {
        for m2 in l[2]..=l[1] {
            n += m1 - m2 + 1;
        }
    }
    n
}

/// Formal character of the gl(3) module with highest weight `λ`, as a map
/// from weights to multiplicities, via Gelfand–Tsetlin patterns.
fn gt_character(l: [i64; 3]) -> BTreeMap<[i64; 3], i64> {
    let mut out = BTreeMap::new();
    for m1 in l[1]..=l[0] {
        for m2 in l[2]..=l[1] {
            for t in m2..=m1 {
                let w = [t, m1 + m2 - t, l[0] + l[1] + l[2] - m1 - m2];
                *out.entry(w).or_insert(0) += 1;
            }
        }
    }
    out
}

fn lambda_of(t: [i64; 3]) -> [i64; 3] {
    [t[0] - 2, t[1] - 1, t[2]]
}

#[test]
fn weyl_dimension_matches_gelfand_tsetlin() {
    for a in -3..=6 {
        for b in -4..a {
            for c in -5..b {
                let t = [a, b, c];
                assert_eq!(dim_sl3(t), gt_count(lambda_of(t)), "{t:?}");
            }
        }
    }
}

#[test]
fn pieri_matches_character_multiplication() {
    // characters of Λ^j C^3
    let wedge = |j: usize| -> Vec<[i64; 3]> {
        subsets(3, j)
            .into_iter()
            .map(|s| std::array::from_fn(|i| i64::from(s.contains(&i))))
            .collect()
    };
    for a in 2..=6 {
        for b in 1..a {
            for c in 0..b {
                let t = [a, b, c];
                for j in 0..=3 {
                    let mut product = BTreeMap::new();
                    for (w, m) in gt_character(lambda_of(t)) {
                        for e in wedge(j) {
                            let key = [w[0] + e[0], w[1] + e[1], w[2] + e[2]];
                            *product.entry(key).or_insert(0) += m;
                        }
                    }
                    let mut sum = BTreeMap::new();
                    for s in pieri_sl3(t, j) {
                        for (w, m) in gt_character(lambda_of(s)) {
                            *sum.entry(w).or_insert(0) += m;
                        }
                    }
                    assert_eq!(product, sum, "{t:?} ⊗ Λ^{j}");
                }
            }
        }
    }
}

#[test]
fn lowest_regular_exceptions() {
    let ic: InfChar = "(543210)".parse().unwrap();
    let p = pattern_of(&ic);
    let mut orders: Vec<(i64, LiftVerdict)> = p
        .arrows
        .iter()
        .map(|a| (a.order, lift_status(a, &ic).unwrap().verdict()))
        .filter(|(_, v)| *v != LiftVerdict::Lifts)
        .collect();
    orders.sort_by_key(|x| x.0);
    assert_eq!(
        orders,
        vec![(4, LiftVerdict::NoLift), (4, LiftVerdict::NoLift), (9, LiftVerdict::Unknown)]
    );
    let dashed: Vec<i64> = p
        .arrows
        .iter()
        .filter(|a| a.kind == ArrowKind::NonstandardDashed)
        .map(|a| a.order)
        .collect();
    assert_eq!(dashed, vec![7, 9]);
}
