mod common;

use std::collections::BTreeSet;

use common::*;
use maxrep::krep::{binomial, enum_divisions};
use maxrep::{
    brute_all_maximal, check_k_repeating, check_maximal_k_rep, compute_x1, extend_k_rep,
    feasible_insertions, leftmost_embedding, lss_oracle, maximal_k_repeating, mkcs_constrained,
    occ_positions, rightmost_embedding, square_pipeline, verify_mcs_output, witness_is_valid,
    McsInstance, OccIndex, Saturation, Seq, Step, Symbol,
};
use proptest::prelude::*;
use rand::Rng;

fn text(max_len: usize, alphabet: u8) -> impl Strategy<Value = Seq> {
    prop::collection::vec(0..alphabet, 0..=max_len)
        .prop_map(|v| v.into_iter().map(|c| Symbol(u32::from(b'a' + c))).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn embeddings_agree_with_naive_scan(host in text(24, 3), pattern in text(6, 3)) {
        let naive = naive_subseq(&pattern, &host);
        let left = leftmost_embedding(&pattern, &host, 0);
        let right = rightmost_embedding(&pattern, &host, host.len() + 1);
        prop_assert_eq!(left.is_some(), naive);
        prop_assert_eq!(right.is_some(), naive);
        if let (Some(l), Some(r)) = (left, right) {
            prop_assert!(l.witnesses(&pattern, &host));
            prop_assert!(r.witnesses(&pattern, &host));
            // any embedding lies pointwise between the two extremes
            for (a, b) in l.indices().iter().zip(r.indices()) {
                prop_assert!(a <= b);
            }
        }
    }

    #[test]
    fn dense_and_sparse_indexes_agree(s in text(30, 4), x in text(4, 4)) {
        let dense = OccIndex::new(&s);
        let sparse = OccIndex::sparse(&s);
        for i in 0..=s.len() + 1 {
            prop_assert_eq!(dense.next_pt(&x, i), sparse.next_pt(&x, i));
            prop_assert_eq!(dense.prev_pt(&x, i), sparse.prev_pt(&x, i));
        }
    }

    #[test]
    fn next_pt_is_the_tightest_window(s in text(30, 3), x in text(4, 3)) {
        let idx = OccIndex::new(&s);
        let mut last = 0;
        for i in 0..=s.len() {
            match idx.next_pt(&x, i) {
                Some(j) => {
                    prop_assert!(j >= last, "next_pt not monotone");
                    last = j;
                    prop_assert!(naive_subseq(&x, &s[i..j]));
                    if !x.is_empty() {
                        prop_assert!(!naive_subseq(&x, &s[i..j - 1]));
                    }
                }
                None => prop_assert!(!naive_subseq(&x, &s[i..])),
            }
        }
    }

    #[test]
    fn prev_pt_is_the_tightest_window(s in text(30, 3), x in text(4, 3)) {
        let idx = OccIndex::new(&s);
        for i in 1..=s.len() + 1 {
            match idx.prev_pt(&x, i) {
                Some(l) => {
                    prop_assert!(l >= 1 && l <= i);
                    prop_assert!(naive_subseq(&x, &s[l - 1..i - 1]));
                    if !x.is_empty() {
                        prop_assert!(!naive_subseq(&x, &s[l..i - 1]));
                    }
                }
                None => prop_assert!(!naive_subseq(&x, &s[..i - 1])),
            }
        }
    }

    #[test]
    fn checked_k_repeating_matches_repetition(s in text(20, 3), x in text(5, 3), k in 1usize..4) {
        let direct = naive_subseq(&x.repeat(k), &s);
        let witness = check_k_repeating(&s, &x, k);
        prop_assert_eq!(witness.is_some(), direct);
        if let Some(w) = witness {
            prop_assert!(witness_is_valid(&s, &x, k, &w));
        }
    }

    #[test]
    fn single_host_saturates_to_the_host(host in text(25, 4), keep in 0.0f64..1.0) {
        let mut rng = rng(host.len() as u64);
        let c = random_subsequence(&mut rng, &host, keep);
        let inst = McsInstance::new(vec![&host], c).unwrap();
        prop_assert_eq!(mkcs_constrained(&inst), host);
    }
}

#[test]
fn saturation_never_reopens_a_passed_gap() {
    let mut rng = rng(11);
    for _ in 0..400 {
        let hosts: Vec<Seq> = (0..rng.random_range(1..=3))
            .map(|_| {
                let n = rng.random_range(0..=20);
                random_seq(&mut rng, n, 3)
            })
            .collect();
        let refs: Vec<&[Symbol]> = hosts.iter().map(|h| &h[..]).collect();
        let inst = McsInstance::new(refs, Seq::empty()).unwrap();
        let mut sat = Saturation::new(&inst);
        loop {
            let step = sat.step();
            let current = sat.current();
            for g in 0..sat.gap() {
                assert!(
                    feasible_insertions(&inst, &current, g).unwrap().is_empty(),
                    "{hosts:?}: gap {g} reopened at {current:?}"
                );
            }
            assert_eq!(
                sat.feasible_here(),
                feasible_insertions(&inst, &current, sat.gap())
                    .unwrap()
                    .into_iter()
                    .collect::<Vec<_>>()
            );
            if step == Step::Finished {
                break;
            }
        }
    }
}

#[test]
fn symbols_missing_from_a_host_do_not_matter() {
    let mut rng = rng(12);
    for _ in 0..500 {
        let hosts: Vec<Seq> = (0..rng.random_range(2..=3))
            .map(|_| {
                let n = rng.random_range(0..=20);
                random_seq(&mut rng, n, 5)
            })
            .collect();
        let shared: BTreeSet<Symbol> = hosts
            .iter()
            .map(|h| h.iter().copied().collect::<BTreeSet<_>>())
            .reduce(|a, b| &a & &b)
            .unwrap();
        let stripped: Vec<Seq> = hosts
            .iter()
            .map(|h| h.iter().copied().filter(|c| shared.contains(c)).collect())
            .collect();
        let full = mkcs_constrained(
            &McsInstance::new(hosts.iter().map(|h| &h[..]).collect(), Seq::empty()).unwrap(),
        );
        let reduced = mkcs_constrained(
            &McsInstance::new(stripped.iter().map(|h| &h[..]).collect(), Seq::empty()).unwrap(),
        );
        assert_eq!(full, reduced, "{hosts:?}");
    }
}

#[test]
fn square_halves_form_a_containment_chain() {
    let mut rng = rng(13);
    for _ in 0..500 {
        let n = rng.random_range(2..=40);
        let s = random_seq(&mut rng, n, 3);
        let idx = OccIndex::new(&s);
        for &sigma in idx.alphabet() {
            if idx.count(sigma) < 2 {
                continue;
            }
            let st = square_pipeline(&s, sigma).unwrap();
            let seed = Seq::new(vec![sigma; st.e]);
            assert!(seed.is_subsequence_of(&st.y_half), "{s:?}");
            assert_eq!(st.y_half.first(), Some(&sigma));
            assert!(st.y_half.is_subsequence_of(&st.z_half), "{s:?}");
            assert!(st.y_half.repeat(2).is_subsequence_of(&s), "{s:?}");
            assert_eq!(compute_x1(&s, sigma).unwrap(), st.y_half);
            let v = check_maximal_k_rep(&s, &st.z_half, 2).unwrap();
            assert!(v.is_maximal, "{s:?} sigma={sigma}: {v:?}");
        }
    }
}

#[test]
fn extension_of_random_seeds_is_maximal_and_contains_the_seed() {
    let mut rng = rng(14);
    let mut tried = 0;
    while tried < 600 {
        let n = rng.random_range(1..=24);
        let s = random_seq(&mut rng, n, 3);
        let k = rng.random_range(2..=3);
        let block = rng.random_range(0..=n / k);
        let start = rng.random_range(0..=n - block);
        let x = random_subsequence(&mut rng, &s[start..start + block], 0.6);
        if x.is_empty() || check_k_repeating(&s, &x, k).is_none() {
            continue;
        }
        tried += 1;
        let sigma = x[rng.random_range(0..x.len())];
        let ext = extend_k_rep(&s, &x, sigma, k).unwrap();
        let unit = ext.unit();
        assert!(x.is_subsequence_of(&unit), "{s:?} X={x:?} -> {unit:?}");
        let v = check_maximal_k_rep(&s, &unit, k).unwrap();
        assert!(
            v.is_valid && v.is_maximal,
            "{s:?} X={x:?} k={k} -> {unit:?}: {v:?}"
        );
    }
}

#[test]
fn maximality_oracle_matches_full_enumeration() {
    for n in 0..=9 {
        for s in all_strings(n, 2) {
            for k in 2..=3 {
                let maximal = brute_all_maximal(&s, k).unwrap();
                for w in all_subsequences(&s) {
                    let v = check_maximal_k_rep(&s, &w, k).unwrap();
                    let repeating = naive_subseq(&w.repeat(k), &s);
                    assert_eq!(v.is_valid, repeating);
                    assert_eq!(
                        v.is_valid && v.is_maximal,
                        maximal.contains(&w),
                        "{s:?} W={w:?} k={k}"
                    );
                }
            }
        }
    }
}

#[test]
fn lss_oracle_matches_subsequence_enumeration() {
    let mut rng = rng(15);
    for _ in 0..150 {
        let n = rng.random_range(0..=14);
        let s = random_seq(&mut rng, n, 3);
        let brute = all_subsequences(&s)
            .into_iter()
            .filter(|w| w.len() % 2 == 0 && w[..w.len() / 2] == w[w.len() / 2..])
            .map(|w| w.len())
            .max()
            .unwrap_or(0);
        assert_eq!(lss_oracle(&s).unwrap(), brute, "{s:?}");
    }
}

#[test]
fn divisions_are_complete_and_ordered() {
    for h in 0..=6 {
        for d in 0..=4 {
            let all: Vec<Vec<usize>> = enum_divisions(h, d).collect();
            assert_eq!(all.len() as u128, binomial(h + d, d));
            assert!(all
                .iter()
                .all(|t| t.len() == d + 1 && t.iter().sum::<usize>() == h));
            assert!(all.windows(2).all(|w| w[0] < w[1]), "h={h} d={d}");
        }
    }
}

#[test]
fn mcs_of_random_hosts_passes_the_verifier() {
    let mut rng = rng(16);
    for _ in 0..300 {
        let hosts: Vec<Seq> = (0..rng.random_range(1..=5))
            .map(|_| {
                let n = rng.random_range(0..=60);
                random_seq(&mut rng, n, 4)
            })
            .collect();
        let refs: Vec<&[Symbol]> = hosts.iter().map(|h| &h[..]).collect();
        let m = mkcs_constrained(&McsInstance::new(refs.clone(), Seq::empty()).unwrap());
        assert!(verify_mcs_output(&refs, &[], &m).accepted(), "{hosts:?}");
    }
}

#[test]
fn large_alphabet_uses_the_sparse_path() {
    let mut rng = rng(17);
    let s: Seq = (0..3000)
        .map(|_| Symbol(0x4e00 + rng.random_range(0..2000)))
        .collect();
    let r = maximal_k_repeating(&s, 2).unwrap();
    assert!(witness_is_valid(&s, &r.unit, 2, &r.witness));
    let sigma = r.sigma.unwrap();
    assert!(occ_positions(&s, sigma).len() >= 2);
}
