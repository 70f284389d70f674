//! Weyl group enumeration with exact integral matrix actions, parabolic
//! subgroup data (W_P, W^P, Levi factors), simple-reflection Bruhat covers,
//! and the chi character entering the Levi-movability test.

use crate::rootsys::{RootSystem, TypeLetter, Weight};
use crate::{Error, Rat, Result};
use std::collections::HashMap;

pub const DEFAULT_GROUP_CAP: usize = 25_000;

/// One group element. Matrices are row-major `r x r`.
#[derive(Debug, Clone)]
pub struct WeylElement {
    pub id: usize,
    /// Lexicographically least reduced word, 0-based simple reflection indices.
    pub word: Vec<u8>,
    pub length: usize,
    /// Action on fundamental-weight coordinates.
    pub weight_matrix: Vec<i64>,
    /// Action on simple-root coordinates.
    pub root_matrix: Vec<i64>,
}

#[derive(Debug)]
pub struct WeylGroup {
    pub rs: RootSystem,
    pub elements: Vec<WeylElement>,
    index: HashMap<Vec<i64>, usize>,
    /// `right_mul[w][i]` = index of `w * s_i`.
    pub right_mul: Vec<Vec<usize>>,
    /// `left_mul[w][i]` = index of `s_i * w`.
    pub left_mul: Vec<Vec<usize>>,
    pub inverse: Vec<usize>,
    pub w0: usize,
    /// Element ids sorted by decreasing length, ties by lexicographic word.
    pub by_desc_length: Vec<usize>,
}

fn mat_mul(a: &[i64], b: &[i64], r: usize) -> Vec<i64> {
    let mut c = vec![0i64; r * r];
    for i in 0..r {
        for k in 0..r {
            let aik = a[i * r + k];
            if aik != 0 {
                for j in 0..r {
                    c[i * r + j] += aik * b[k * r + j];
                }
            }
        }
    }
    c
}

pub fn enumerate_group(rs: RootSystem) -> Result<WeylGroup> {
    enumerate_group_capped(rs, DEFAULT_GROUP_CAP)
}

pub fn enumerate_group_capped(rs: RootSystem, cap: usize) -> Result<WeylGroup> {
    let r = rs.rank;
    let expected_order = match rs.type_letter {
        TypeLetter::A => factorial(r + 1),
        TypeLetter::C => (1usize << r) * factorial(r),
        TypeLetter::D => (1usize << (r - 1)) * factorial(r),
    };
    if expected_order > cap {
        return Err(Error::GroupOrderCap(expected_order, cap));
    }

    // generator matrices
    let mut gen_weight = Vec::with_capacity(r);
    let mut gen_root = Vec::with_capacity(r);
    for i in 0..r {
        // s_i on omega-coords: (s_i c)_j = c_j - c_i * cartan[j][i]
        let mut mw = vec![0i64; r * r];
        for j in 0..r {
            mw[j * r + j] = 1;
            mw[j * r + i] -= rs.cartan[j][i];
        }
        gen_weight.push(mw);
        // s_i on root coords: (s_i b)_j = b_j - delta_{ji} sum_k cartan[i][k] b_k
        let mut mr = vec![0i64; r * r];
        for j in 0..r {
            mr[j * r + j] = 1;
        }
        for k in 0..r {
            mr[i * r + k] -= rs.cartan[i][k];
        }
        gen_root.push(mr);
    }

    let mut identity = vec![0i64; r * r];
    for i in 0..r {
        identity[i * r + i] = 1;
    }
    let mut elements = vec![WeylElement {
        id: 0,
        word: Vec::new(),
        length: 0,
        weight_matrix: identity.clone(),
        root_matrix: identity.clone(),
    }];
    let mut index = HashMap::new();
    index.insert(identity, 0usize);
    let mut right_mul: Vec<Vec<usize>> = Vec::new();
    let mut head = 0usize;
    while head < elements.len() {
        let (word, len, wm, rm) = {
            let e = &elements[head];
            (
                e.word.clone(),
                e.length,
                e.weight_matrix.clone(),
                e.root_matrix.clone(),
            )
        };
        let mut row = Vec::with_capacity(r);
        for i in 0..r {
            let nwm = mat_mul(&wm, &gen_weight[i], r);
            let id = match index.get(&nwm) {
                Some(&id) => id,
                None => {
                    let nrm = mat_mul(&rm, &gen_root[i], r);
                    let id = elements.len();
                    let mut nword = word.clone();
                    nword.push(i as u8);
                    elements.push(WeylElement {
                        id,
                        word: nword,
                        length: len + 1,
                        weight_matrix: nwm.clone(),
                        root_matrix: nrm,
                    });
                    index.insert(nwm, id);
                    id
                }
            };
            row.push(id);
        }
        right_mul.push(row);
        head += 1;
    }
    assert_eq!(elements.len(), expected_order, "Weyl group order mismatch");

    let n = elements.len();
    let mut left_mul = vec![vec![0usize; r]; n];
    for w in 0..n {
        for i in 0..r {
            let m = mat_mul(&gen_weight[i], &elements[w].weight_matrix, r);
            left_mul[w][i] = *index.get(&m).expect("closed under multiplication");
        }
    }
    let mut inverse = vec![0usize; n];
    for w in 0..n {
        let mut cur = 0usize;
        for &i in elements[w].word.iter().rev() {
            cur = right_mul[cur][i as usize];
        }
        inverse[w] = cur;
    }
    let w0 = (0..n).max_by_key(|&w| elements[w].length).unwrap();
    assert_eq!(elements[w0].length, rs.positive_roots.len());
    let mut by_desc_length: Vec<usize> = (0..n).collect();
    by_desc_length.sort_by(|&a, &b| {
        elements[b]
            .length
            .cmp(&elements[a].length)
            .then_with(|| elements[a].word.cmp(&elements[b].word))
    });
    Ok(WeylGroup {
        rs,
        elements,
        index,
        right_mul,
        left_mul,
        inverse,
        w0,
        by_desc_length,
    })
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

impl WeylGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn rank(&self) -> usize {
        self.rs.rank
    }

    pub fn length(&self, w: usize) -> usize {
        self.elements[w].length
    }

    pub fn sign(&self, w: usize) -> i64 {
        if self.elements[w].length % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Index of `a * b`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let mut cur = a;
        for &i in &self.elements[b].word.clone() {
            cur = self.right_mul[cur][i as usize];
        }
        cur
    }

    pub fn lookup(&self, weight_matrix: &[i64]) -> Option<usize> {
        self.index.get(weight_matrix).copied()
    }

    /// `w(lambda)` in fundamental-weight coordinates.
    pub fn act_on_weight(&self, w: usize, lam: &Weight) -> Weight {
        let r = self.rank();
        let m = &self.elements[w].weight_matrix;
        let coords = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| Rat::from(crate::Int::from(m[i * r + j])) * &lam.coords[j])
                    .sum()
            })
            .collect();
        Weight { coords }
    }

    /// `w(y)` for a coweight in coroot coordinates: contragredient action.
    pub fn act_on_coweight(&self, w: usize, y: &crate::rootsys::Coweight) -> crate::rootsys::Coweight {
        let r = self.rank();
        let m = &self.elements[self.inverse[w]].weight_matrix;
        // coords' = M_{w^{-1}}^T y
        let coords = (0..r)
            .map(|j| {
                (0..r)
                    .map(|i| Rat::from(crate::Int::from(m[i * r + j])) * &y.coords[i])
                    .sum()
            })
            .collect();
        crate::rootsys::Coweight { coords }
    }

    /// `w(alpha_i)` in simple-root coordinates: column `i` of the root matrix.
    pub fn act_on_simple_root(&self, w: usize, i: usize) -> Vec<i64> {
        let r = self.rank();
        let m = &self.elements[w].root_matrix;
        (0..r).map(|k| m[k * r + i]).collect()
    }

    /// True iff `l(s_i w) > l(w)`, i.e. `w^{-1}(alpha_i)` is positive.
    pub fn left_ascent(&self, w: usize, i: usize) -> bool {
        self.left_mul[w][i] != w && self.length(self.left_mul[w][i]) > self.length(w)
    }

    /// Dual weight `-w0(lambda)`; preserves dominance.
    pub fn dual_weight(&self, lam: &Weight) -> Weight {
        let neg = self.act_on_weight(self.w0, lam);
        Weight {
            coords: neg.coords.into_iter().map(|c| -c).collect(),
        }
    }
}

/// A Levi factor of a parabolic: its simple type and the embedding of its
/// Bourbaki nodes (0-based) into the parent's nodes (0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeviFactor {
    pub letter: TypeLetter,
    pub rank: usize,
    /// `nodes[k]` = parent node carrying the factor's node `k`.
    pub nodes: Vec<usize>,
}

/// A maximal standard parabolic `P_i`.
#[derive(Debug, Clone)]
pub struct Parabolic {
    /// Omitted node (0-based): `Delta(P)` is everything else.
    pub omitted: usize,
    pub delta_p: Vec<usize>,
    pub wp_elements: Vec<usize>,
    pub w0p: usize,
    /// Minimal-length coset representatives, sorted by (length, word).
    pub min_reps: Vec<usize>,
    pub levi_type: String,
    pub levi_factors: Vec<LeviFactor>,
    /// dim G/P = l(w0) - l(w0^P).
    pub dim_gp: usize,
    is_min_rep: Vec<bool>,
}

impl Parabolic {
    pub fn contains_rep(&self, w: usize) -> bool {
        self.is_min_rep[w]
    }
}

/// Build the parabolic `P_i` (0-based `i`).
pub fn maximal_parabolic(wg: &WeylGroup, i: usize) -> Parabolic {
    let r = wg.rank();
    assert!(i < r);
    let delta_p: Vec<usize> = (0..r).filter(|&j| j != i).collect();
    parabolic_for_subset(wg, i, delta_p)
}

fn parabolic_for_subset(wg: &WeylGroup, omitted: usize, delta_p: Vec<usize>) -> Parabolic {
    let n = wg.order();
    // W_P: closure of the subset generators
    let mut in_wp = vec![false; n];
    in_wp[0] = true;
    let mut queue = vec![0usize];
    while let Some(w) = queue.pop() {
        for &j in &delta_p {
            let v = wg.right_mul[w][j];
            if !in_wp[v] {
                in_wp[v] = true;
                queue.push(v);
            }
        }
    }
    let wp_elements: Vec<usize> = (0..n).filter(|&w| in_wp[w]).collect();
    let w0p = *wp_elements
        .iter()
        .max_by_key(|&&w| wg.length(w))
        .expect("nonempty");
    // v in W^P iff v(alpha_j) > 0 for all j in Delta(P)
    let is_min_rep: Vec<bool> = (0..n)
        .map(|v| {
            delta_p
                .iter()
                .all(|&j| wg.act_on_simple_root(v, j).iter().all(|&c| c >= 0))
        })
        .collect();
    let mut min_reps: Vec<usize> = (0..n).filter(|&v| is_min_rep[v]).collect();
    min_reps.sort_by(|&a, &b| {
        wg.length(a)
            .cmp(&wg.length(b))
            .then_with(|| wg.elements[a].word.cmp(&wg.elements[b].word))
    });
    assert_eq!(min_reps.len() * wp_elements.len(), n);
    let levi_factors = levi_factors(&wg.rs, &delta_p);
    let levi_type = levi_type_string(&levi_factors);
    let dim_gp = wg.length(wg.w0) - wg.length(w0p);
    Parabolic {
        omitted,
        delta_p,
        wp_elements,
        w0p,
        min_reps,
        levi_type,
        levi_factors,
        dim_gp,
        is_min_rep,
    }
}

/// Canonical Levi type string: factors sorted by letter, then rank descending.
pub fn levi_type_string(factors: &[LeviFactor]) -> String {
    if factors.is_empty() {
        return "1".to_string();
    }
    let mut keys: Vec<(char, usize)> = factors
        .iter()
        .map(|f| (f.letter.as_char(), f.rank))
        .collect();
    keys.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    keys.iter()
        .map(|(c, r)| format!("{c}{r}"))
        .collect::<Vec<_>>()
        .join("x")
}

/// Decompose the Dynkin subdiagram on `delta_p` into simple factors with
/// explicit node embeddings.
pub fn levi_factors(rs: &RootSystem, delta_p: &[usize]) -> Vec<LeviFactor> {
    let adjacent = |a: usize, b: usize| rs.cartan[a][b] != 0 && a != b;
    let mut remaining: Vec<usize> = delta_p.to_vec();
    remaining.sort_unstable();
    let mut factors = Vec::new();
    while let Some(&start) = remaining.first() {
        // connected component
        let mut comp = vec![start];
        let mut frontier = vec![start];
        while let Some(a) = frontier.pop() {
            for &b in &remaining {
                if !comp.contains(&b) && adjacent(a, b) {
                    comp.push(b);
                    frontier.push(b);
                }
            }
        }
        comp.sort_unstable();
        remaining.retain(|x| !comp.contains(x));
        factors.push(classify_component(rs, &comp));
    }
    // deterministic order: by smallest parent node
    factors.sort_by_key(|f| *f.nodes.iter().min().unwrap());
    for f in &factors {
        check_embedding(rs, f);
    }
    factors
}

fn classify_component(rs: &RootSystem, comp: &[usize]) -> LeviFactor {
    let m = comp.len();
    if m == 1 {
        return LeviFactor {
            letter: TypeLetter::A,
            rank: 1,
            nodes: comp.to_vec(),
        };
    }
    let neighbors = |a: usize| -> Vec<usize> {
        comp.iter()
            .copied()
            .filter(|&b| b != a && rs.cartan[a][b] != 0)
            .collect()
    };
    let has_double = comp
        .iter()
        .any(|&a| comp.iter().any(|&b| a != b && rs.cartan[a][b] * rs.cartan[b][a] == 2));
    let fork = comp.iter().copied().find(|&a| neighbors(a).len() == 3);
    if let Some(center) = fork {
        // type D: order the long branch from its far end, spin legs last
        let mut branches: Vec<Vec<usize>> = neighbors(center)
            .into_iter()
            .map(|first| {
                let mut path = vec![first];
                let mut prev = center;
                loop {
                    let next: Vec<usize> = neighbors(*path.last().unwrap())
                        .into_iter()
                        .filter(|&x| x != prev)
                        .collect();
                    match next.as_slice() {
                        [] => break,
                        [x] => {
                            prev = *path.last().unwrap();
                            path.push(*x);
                        }
                        _ => unreachable!("at most one fork in types A/C/D Levis"),
                    }
                }
                path
            })
            .collect();
        branches.sort_by_key(|b| (b.len(), b[0]));
        let (spin1, spin2, long) = (&branches[0], &branches[1], &branches[2]);
        assert_eq!(spin1.len(), 1);
        assert_eq!(spin2.len(), 1);
        let mut nodes: Vec<usize> = long.iter().rev().copied().collect();
        nodes.push(center);
        nodes.push(spin1[0]);
        nodes.push(spin2[0]);
        return LeviFactor {
            letter: TypeLetter::D,
            rank: m,
            nodes,
        };
    }
    // chain: find endpoints
    let ends: Vec<usize> = comp
        .iter()
        .copied()
        .filter(|&a| neighbors(a).len() == 1)
        .collect();
    assert_eq!(ends.len(), 2);
    let path_from = |start: usize| -> Vec<usize> {
        let mut path = vec![start];
        loop {
            let last = *path.last().unwrap();
            let next: Vec<usize> = neighbors(last)
                .into_iter()
                .filter(|x| !path.contains(x))
                .collect();
            match next.as_slice() {
                [] => break,
                [x] => path.push(*x),
                _ => unreachable!(),
            }
        }
        path
    };
    if has_double {
        // type C: the long-root node (parent's last node) goes last
        let long_node = rs.rank - 1;
        assert!(comp.contains(&long_node));
        let start = ends.into_iter().find(|&e| e != long_node).unwrap();
        let nodes = path_from(start);
        assert_eq!(*nodes.last().unwrap(), long_node);
        LeviFactor {
            letter: TypeLetter::C,
            rank: m,
            nodes,
        }
    } else {
        let start = *ends.iter().min().unwrap();
        LeviFactor {
            letter: TypeLetter::A,
            rank: m,
            nodes: path_from(start),
        }
    }
}

fn check_embedding(rs: &RootSystem, f: &LeviFactor) {
    let sub = crate::rootsys::build_root_system(f.letter, f.rank)
        .expect("factor type valid");
    for a in 0..f.rank {
        for b in 0..f.rank {
            assert_eq!(
                rs.cartan[f.nodes[a]][f.nodes[b]],
                sub.cartan[a][b],
                "Levi embedding does not match factor Cartan"
            );
        }
    }
}

/// Half-sum of the Levi's positive roots, as a weight of the parent.
pub fn rho_levi(rs: &RootSystem, p: &Parabolic) -> Weight {
    let mut sum = vec![0i64; rs.rank];
    for root in &rs.positive_roots {
        let supported = (0..rs.rank).all(|j| root[j] == 0 || p.delta_p.contains(&j));
        if supported {
            for j in 0..rs.rank {
                sum[j] += root[j];
            }
        }
    }
    // convert from root coords, then halve
    let w = rs.root_to_weight(&sum);
    Weight {
        coords: w
            .coords
            .into_iter()
            .map(|c| c / Rat::from(crate::Int::from(2)))
            .collect(),
    }
}

/// chi_w = rho - 2 rho^L + w^{-1} rho.
pub fn chi(wg: &WeylGroup, w: usize, p: &Parabolic) -> Weight {
    let rho = &wg.rs.rho;
    let rho_l = rho_levi(&wg.rs, p);
    let winv_rho = wg.act_on_weight(wg.inverse[w], rho);
    let two_rho_l = Weight {
        coords: rho_l.coords.iter().map(|c| c + c).collect(),
    };
    rho.sub(&two_rho_l).add(&winv_rho)
}

/// If `s_k v` covers `v` in Bruhat order and stays in `W^P`, return it.
pub fn left_simple_cover(wg: &WeylGroup, v: usize, k: usize, p: &Parabolic) -> Option<usize> {
    let w = wg.left_mul[v][k];
    (wg.length(w) == wg.length(v) + 1 && p.contains_rep(w)).then_some(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;
    use num_traits::Zero;

    fn group(t: TypeLetter, r: usize) -> WeylGroup {
        enumerate_group(build_root_system(t, r).unwrap()).unwrap()
    }

    #[test]
    fn orders_and_longest() {
        let a2 = group(TypeLetter::A, 2);
        assert_eq!(a2.order(), 6);
        assert_eq!(a2.length(a2.w0), 3);
        let d4 = group(TypeLetter::D, 4);
        assert_eq!(d4.order(), 192);
        assert_eq!(d4.length(d4.w0), 12);
        let d5 = group(TypeLetter::D, 5);
        assert_eq!(d5.order(), 1920);
    }

    #[test]
    fn length_identities() {
        let wg = group(TypeLetter::C, 2);
        for w in 0..wg.order() {
            let ww0 = wg.mul(w, wg.w0);
            assert_eq!(wg.length(w) + wg.length(ww0), wg.length(wg.w0));
            assert_eq!(wg.length(w), wg.length(wg.inverse[w]));
        }
    }

    #[test]
    fn length_counts_inversions() {
        let wg = group(TypeLetter::A, 3);
        for w in 0..wg.order() {
            let mut inversions = 0;
            for root in &wg.rs.positive_roots.clone() {
                // w(root) in root coords
                let r = wg.rank();
                let m = &wg.elements[w].root_matrix;
                let img: Vec<i64> = (0..r)
                    .map(|k| (0..r).map(|j| m[k * r + j] * root[j]).sum())
                    .collect();
                if img.iter().all(|&x| x <= 0) {
                    inversions += 1;
                }
            }
            assert_eq!(inversions, wg.length(w));
        }
    }

    #[test]
    fn actions_contragredient() {
        let wg = group(TypeLetter::C, 3);
        let lam = Weight::from_ints(&[1, 2, 0]);
        let y = wg.rs.fundamental_coweight(1);
        let base = wg.rs.pair(&lam, &y).unwrap();
        for w in (0..wg.order()).step_by(7) {
            let wl = wg.act_on_weight(w, &lam);
            let wy = wg.act_on_coweight(w, &y);
            assert_eq!(wg.rs.pair(&wl, &wy).unwrap(), base);
        }
    }

    #[test]
    fn w0_negates_dominant_chamber() {
        for (t, r) in [(TypeLetter::A, 3), (TypeLetter::D, 4)] {
            let wg = group(t, r);
            let lam = Weight::from_ints(&vec![1; r]);
            let img = wg.act_on_weight(wg.w0, &lam);
            assert!(img.coords.iter().all(|c| c < &Rat::zero()));
            let dual = wg.dual_weight(&lam);
            assert!(dual.is_dominant());
            assert_eq!(wg.dual_weight(&dual), lam);
        }
    }

    #[test]
    fn dual_weight_examples() {
        let a2 = group(TypeLetter::A, 2);
        assert_eq!(
            a2.dual_weight(&Weight::fundamental(2, 0)),
            Weight::fundamental(2, 1)
        );
        let d5 = group(TypeLetter::D, 5);
        assert_eq!(
            d5.dual_weight(&Weight::fundamental(5, 3)),
            Weight::fundamental(5, 4)
        );
        let d6 = group(TypeLetter::D, 6);
        assert_eq!(
            d6.dual_weight(&Weight::fundamental(6, 3)),
            Weight::fundamental(6, 3)
        );
    }

    #[test]
    fn parabolic_a2() {
        let wg = group(TypeLetter::A, 2);
        let p = maximal_parabolic(&wg, 0);
        assert_eq!(p.min_reps.len(), 3);
        assert_eq!(p.levi_type, "A1");
        assert_eq!(p.dim_gp, 2);
    }

    #[test]
    fn coset_decomposition_unique() {
        for (t, r) in [(TypeLetter::A, 3), (TypeLetter::C, 3), (TypeLetter::D, 4)] {
            let wg = group(t, r);
            for i in 0..r {
                let p = maximal_parabolic(&wg, i);
                let mut seen = vec![false; wg.order()];
                for &v in &p.min_reps {
                    for &u in &p.wp_elements {
                        let w = wg.mul(v, u);
                        assert!(!seen[w]);
                        seen[w] = true;
                        assert_eq!(wg.length(w), wg.length(v) + wg.length(u));
                    }
                }
                assert!(seen.iter().all(|&s| s));
            }
        }
    }

    #[test]
    fn levi_types_d5() {
        let wg = group(TypeLetter::D, 5);
        let types: std::collections::BTreeSet<String> = (0..5)
            .map(|i| maximal_parabolic(&wg, i).levi_type)
            .collect();
        let expect: std::collections::BTreeSet<String> =
            ["D4", "A3xA1", "A2xA1xA1", "A4"]
                .iter()
                .map(|s| s.to_string())
                .collect();
        assert_eq!(types, expect);
    }

    #[test]
    fn levi_types_d6() {
        let wg = group(TypeLetter::D, 6);
        let types: std::collections::BTreeSet<String> = (0..6)
            .map(|i| maximal_parabolic(&wg, i).levi_type)
            .collect();
        let expect: std::collections::BTreeSet<String> =
            ["D5", "A1xD4", "A3xA2", "A3xA1xA1", "A5"]
                .iter()
                .map(|s| s.to_string())
                .collect();
        assert_eq!(types, expect);
    }

    #[test]
    fn chi_identity_at_e() {
        let wg = group(TypeLetter::A, 2);
        let p = maximal_parabolic(&wg, 0);
        let chi_e = chi(&wg, 0, &p);
        let rho_l = rho_levi(&wg.rs, &p);
        let expect = wg.rs.rho.sub(&rho_l).scale(2);
        assert_eq!(chi_e, expect);
        // rho^L has no alpha_i component: chi_e(x_i) = 2 rho(x_i)
        let xi = wg.rs.fundamental_coweight(0);
        let lhs = wg.rs.pair(&chi_e, &xi).unwrap();
        let rhs = wg.rs.pair(&wg.rs.rho, &xi).unwrap() * Rat::from(crate::Int::from(2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn covers_in_wp() {
        let wg = group(TypeLetter::A, 2);
        let p = maximal_parabolic(&wg, 0);
        // e -> s1 in W^P
        let s1 = wg.right_mul[0][0];
        assert_eq!(left_simple_cover(&wg, 0, 0, &p), Some(s1));
        // s1 -> s2 s1 in W^P
        let s2s1 = wg.left_mul[s1][1];
        assert_eq!(left_simple_cover(&wg, s1, 1, &p), Some(s2s1));
        // top of W^P has no covers
        let top = *p.min_reps.last().unwrap();
        for k in 0..2 {
            assert_eq!(left_simple_cover(&wg, top, k, &p), None);
        }
    }

    #[test]
    fn cover_properties_exhaustive() {
        let wg = group(TypeLetter::C, 3);
        for i in 0..3 {
            let p = maximal_parabolic(&wg, i);
            for &v in &p.min_reps {
                for k in 0..3 {
                    if let Some(w) = left_simple_cover(&wg, v, k, &p) {
                        assert_eq!(wg.length(w), wg.length(v) + 1);
                        assert!(p.contains_rep(w));
                    }
                }
            }
        }
    }
}
