mod support;

use proptest::prelude::*;
use rand::Rng;
use support::gen::{self, Shape};
use support::oracle::*;
use tqnet_core::{
    in_sum, in_sums, multiply, normalize_rows, out_sum, top_links, top_loops, triple_product, two_to_one_cols,
    Combinatorial, MinPlus, TemporalNetwork,
};

fn dims() -> impl Strategy<Value = (u64, usize, usize, usize, i64)> {
    (any::<u64>(), 1usize..12, 1usize..12, 1usize..12, 2i64..20)
}

fn dense_of(net: &TemporalNetwork, len: i64) -> DenseNet {
    DenseNet::from_network(net, len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_matches_dense_oracle((seed, x, p, y, len) in dims()) {
        let mut rng = gen::rng(seed);
        let (xs, ps, ys) = (gen::labels("x", x), gen::labels("p", p), gen::labels("y", y));
        let a = gen::network(&mut rng, &xs, Some(&ps), 0.3, len, Shape::General);
        let b = gen::network(&mut rng, &ps, Some(&ys), 0.3, len, Shape::General);
        let c = multiply(&a, &b, &Combinatorial).unwrap();
        for (_, q) in c.links() {
            prop_assert!(!q.is_empty() && is_canonical(q));
        }
        let expected = dense_of(&a, len).product(&dense_of(&b, len), len, |u, v| u + v, |u, v| u * v);
        prop_assert_eq!(dense_of(&c, len), expected);

        let m = multiply(&a, &b, &MinPlus).unwrap();
        let expected = dense_of(&a, len).product(&dense_of(&b, len), len, f64::min, |u, v| u + v);
        prop_assert_eq!(dense_of(&m, len), expected);
    }

    #[test]
    fn product_is_associative((seed, x, p, y, len) in dims(), z in 1usize..8) {
        let mut rng = gen::rng(seed);
        let (xs, ps, ys, zs) = (gen::labels("x", x), gen::labels("p", p), gen::labels("y", y), gen::labels("z", z));
        let a = gen::network(&mut rng, &xs, Some(&ps), 0.3, len, Shape::General);
        let b = gen::network(&mut rng, &ps, Some(&ys), 0.3, len, Shape::General);
        let c = gen::network(&mut rng, &ys, Some(&zs), 0.3, len, Shape::General);
        let left = multiply(&multiply(&a, &b, &Combinatorial).unwrap(), &c, &Combinatorial).unwrap();
        let right = multiply(&a, &multiply(&b, &c, &Combinatorial).unwrap(), &Combinatorial).unwrap();
        prop_assert_eq!(left.links().collect::<Vec<_>>(), right.links().collect::<Vec<_>>());
        let triple = triple_product(&a, &b, &c, &Combinatorial).unwrap();
        prop_assert_eq!(triple, left);
    }

    #[test]
    fn cumulative_factors_give_cumulative_product((seed, x, p, y, len) in dims()) {
        let mut rng = gen::rng(seed);
        let (xs, ps, ys) = (gen::labels("x", x), gen::labels("p", p), gen::labels("y", y));
        let a = gen::network(&mut rng, &xs, Some(&ps), 0.3, len, Shape::Cumulative);
        let b = gen::network(&mut rng, &ps, Some(&ys), 0.3, len, Shape::Cumulative);
        let c = multiply(&a, &b, &Combinatorial).unwrap();
        for (_, q) in c.links() {
            prop_assert!(q.is_cumulative(c.horizon()));
        }
        c.verify_kind().unwrap();
    }

    #[test]
    fn binary_instant_product_counts_shared_neighbours((seed, x, p, y, len) in dims()) {
        let mut rng = gen::rng(seed);
        let (xs, ps, ys) = (gen::labels("x", x), gen::labels("p", p), gen::labels("y", y));
        let a = gen::network(&mut rng, &xs, Some(&ps), 0.3, len, Shape::BinaryInstant);
        let b = gen::network(&mut rng, &ps, Some(&ys), 0.3, len, Shape::BinaryInstant);
        let c = multiply(&a, &b, &Combinatorial).unwrap();
        for i in 0..x {
            for j in 0..y {
                for t in 0..len {
                    let shared = (0..p)
                        .filter(|&k| {
                            a.link(i, k).is_some_and(|q| q.value_at(t).is_some())
                                && b.link(k, j).is_some_and(|q| q.value_at(t).is_some())
                        })
                        .count();
                    let got = c.link(i, j).and_then(|q| q.value_at(t));
                    prop_assert_eq!(got, (shared > 0).then_some(shared as f64));
                }
            }
        }
    }

    #[test]
    fn transpose_matches_matrix_transpose((seed, x, p, _y, len) in dims()) {
        let mut rng = gen::rng(seed);
        let a = gen::network(&mut rng, &gen::labels("x", x), Some(&gen::labels("p", p)), 0.3, len, Shape::General);
        prop_assert_eq!(dense_of(&a.transpose(), len), dense_of(&a, len).transpose());
        prop_assert_eq!(a.transpose().transpose(), a);
    }

    #[test]
    fn loops_removed_only((seed, x, _p, _y, len) in dims()) {
        let mut rng = gen::rng(seed);
        let a = gen::network(&mut rng, &gen::labels("v", x), None, 0.4, len, Shape::General);
        let d = a.without_loops().unwrap();
        for ((t, h), q) in a.links() {
            if t == h {
                prop_assert!(d.link(t, h).is_none());
            } else {
                prop_assert_eq!(d.link(t, h), Some(q));
            }
        }
    }

    #[test]
    fn lifted_view_multiplies_like_one_mode((seed, x, _p, _y, len) in dims()) {
        let mut rng = gen::rng(seed);
        let vs = gen::labels("v", x);
        let a = gen::network(&mut rng, &vs, None, 0.3, len, Shape::General);
        let b = gen::network(&mut rng, &vs, None, 0.3, len, Shape::General);
        let direct = multiply(&a, &b, &Combinatorial).unwrap();
        let lifted = multiply(&a.to_two_mode().unwrap(), &b, &Combinatorial).unwrap();
        prop_assert_eq!(direct.links().collect::<Vec<_>>(), lifted.links().collect::<Vec<_>>());
        prop_assert_eq!(dense_of(&direct, len), dense_of(&a, len).product(&dense_of(&b, len), len, |u, v| u + v, |u, v| u * v));
    }

    #[test]
    fn co_occurrence_is_symmetric_product((seed, x, p, _y, len) in dims()) {
        let mut rng = gen::rng(seed);
        let a = gen::network(&mut rng, &gen::labels("e", x), Some(&gen::labels("p", p)), 0.3, len, Shape::BinaryInstant);
        let co = two_to_one_cols(&a, &Combinatorial).unwrap();
        prop_assert!(!co.is_directed());
        prop_assert!(co.links().all(|((t, h), _)| t <= h));
        let full = multiply(&a.transpose(), &a, &Combinatorial).unwrap();
        prop_assert_eq!(dense_of(&co, len), dense_of(&full, len));
    }

    #[test]
    fn sums_match_row_and_column_totals((seed, x, p, _y, len) in dims()) {
        let mut rng = gen::rng(seed);
        let a = gen::network(&mut rng, &gen::labels("e", x), Some(&gen::labels("p", p)), 0.3, len, Shape::General);
        let d = dense_of(&a, len);
        for col in 0..p {
            let expected = (0..x).fold(vec![None; len as usize], |acc, r| dense_sum(&acc, &d.cells[r][col], |u, v| u + v));
            prop_assert_eq!(to_dense(&in_sum(&a, col).unwrap(), len), expected);
        }
        for row in 0..x {
            let expected = (0..p).fold(vec![None; len as usize], |acc, c| dense_sum(&acc, &d.cells[row][c], |u, v| u + v));
            prop_assert_eq!(to_dense(&out_sum(&a, row).unwrap(), len), expected);
            prop_assert_eq!(out_sum(&a, row).unwrap(), in_sum(&a.transpose(), row).unwrap());
        }
        let all = in_sums(&a);
        for (col, q) in all.iter().enumerate() {
            prop_assert_eq!(q, &in_sum(&a, col).unwrap());
        }
    }

    #[test]
    fn in_sum_is_linear((seed, x, p, _y, len) in dims()) {
        let mut rng = gen::rng(seed);
        let (es, ps) = (gen::labels("e", x), gen::labels("p", p));
        let a = gen::network(&mut rng, &es, Some(&ps), 0.3, len, Shape::General);
        let b = gen::network(&mut rng, &es, Some(&ps), 0.3, len, Shape::General);
        let mut sum = a.clone();
        for ((t, h), q) in b.links() {
            sum.insert(t, h, q.clone()).unwrap();
        }
        for col in 0..p {
            let expected = in_sum(&a, col).unwrap().sum(&in_sum(&b, col).unwrap(), &Combinatorial);
            prop_assert_eq!(in_sum(&sum, col).unwrap(), expected);
        }
    }

    #[test]
    fn normalized_rows_sum_to_one((seed, x, p, _y, len) in dims()) {
        let mut rng = gen::rng(seed);
        let es = gen::labels("e", x);
        let mut a = TemporalNetwork::two_mode(es, gen::labels("p", p), gen::horizon(len));
        for i in 0..x {
            for j in 0..p {
                if rng.random_bool(0.4) {
                    // values >= 1 so every defined row sum is at least 1
                    let q = gen::quantity(&mut rng, len, 3).map(|v| v + 1.0);
                    a.insert(i, j, q).unwrap();
                }
            }
        }
        let n = normalize_rows(&a);
        let d = dense_of(&n, len);
        for row in &d.cells {
            for t in 0..len as usize {
                let vals: Vec<f64> = row.iter().filter_map(|c| c[t]).collect();
                if !vals.is_empty() {
                    prop_assert!((vals.iter().sum::<f64>() - 1.0).abs() <= 1e-12);
                }
            }
        }
        // domains are untouched
        for ((t, h), q) in a.links() {
            prop_assert_eq!(n.link(t, h).unwrap().activity(), q.activity());
        }
    }

    #[test]
    fn ranked_links_are_ordered_and_complete((seed, x, _p, _y, len) in dims(), threshold in 0u32..20) {
        let mut rng = gen::rng(seed);
        let a = gen::network(&mut rng, &gen::labels("v", x), None, 0.4, len, Shape::General);
        let th = f64::from(threshold);
        let top = top_links(&a, th);
        let expected: usize = a.links().filter(|((t, h), q)| t != h && dense_total(&to_dense(q, len)) >= th).count();
        prop_assert_eq!(top.len(), expected);
        for r in &top {
            prop_assert_eq!(r.total, dense_total(&to_dense(a.link(r.tail, r.head).unwrap(), len)));
            prop_assert!(r.tail != r.head);
        }
        for w in top.windows(2) {
            let key = |r: &tqnet_core::RankedLink| (-r.total, r.tail_label.clone(), r.head_label.clone());
            prop_assert!(key(&w[0]) <= key(&w[1]));
        }
        let loops = top_loops(&a, th);
        let expected: usize = a.links().filter(|((t, h), q)| t == h && dense_total(&to_dense(q, len)) >= th).count();
        prop_assert_eq!(loops.len(), expected);
        prop_assert!(loops.iter().all(|r| r.tail == r.head));
    }
}
