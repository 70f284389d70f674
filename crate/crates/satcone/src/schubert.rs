//! The value-table engine: evaluations of the BGG basis polynomials on the
//! Weyl orbit of a fixed regular point, the integration functional, triple
//! intersection numbers on G/P, and Levi-movable triple enumeration.
//!
//! No polynomials are ever materialized: a class is represented by the list
//! of its values on the orbit, and divided differences become arithmetic on
//! those lists.

use crate::weyl::{chi, Parabolic, WeylGroup};
use crate::{Error, Int, Rat, Result};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

/// Which divided-difference update builds the table.
///
/// `Pointwise` divides by the simple root evaluated at the relevant orbit
/// point; `ConstantDenominator` divides by its value at the base point, as
/// in a literal reading of the recursion. The duality arbiter test accepts
/// `Pointwise` and rejects `ConstantDenominator`, so `Pointwise` is the
/// default everywhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DividedDifferenceVariant {
    #[default]
    Pointwise,
    ConstantDenominator,
}

/// Default cap on |W| for dense table construction (D_5 must fit; D_6 is a
/// deliberate long-job override).
pub const DEFAULT_TABLE_CAP: usize = 2_000;

/// Per-element evaluation rows: `row(w)[t] = P~_w(t^{-1} h)`, stored as an
/// integer vector over a common positive denominator.
pub struct ValueTable {
    /// `h` in the fundamental-coweight basis: `alpha_i(h) = h[i]`.
    pub h: Vec<i64>,
    rows: Vec<(Vec<Int>, Int)>,
    /// Product of all positive roots evaluated at `h` (= |W| * P~_{w0}(h)).
    pub prod_pos_roots_at_h: Int,
    /// `(-1)^{l(t)}` per group element.
    signs: Vec<i64>,
    pub variant: DividedDifferenceVariant,
}

impl ValueTable {
    pub fn row(&self, w: usize) -> (&[Int], &Int) {
        (&self.rows[w].0, &self.rows[w].1)
    }

    /// Value `P~_w(t^{-1} h)` as an exact rational.
    pub fn value(&self, w: usize, t: usize) -> Rat {
        Rat::new(self.rows[w].0[t].clone(), self.rows[w].1.clone())
    }

    pub fn sign(&self, t: usize) -> i64 {
        self.signs[t]
    }
}

pub fn build_value_table(
    wg: &WeylGroup,
    h: &[i64],
    variant: DividedDifferenceVariant,
) -> Result<ValueTable> {
    build_value_table_capped(wg, h, variant, DEFAULT_TABLE_CAP)
}

pub fn build_value_table_capped(
    wg: &WeylGroup,
    h: &[i64],
    variant: DividedDifferenceVariant,
    cap: usize,
) -> Result<ValueTable> {
    let n = wg.order();
    let r = wg.rank();
    assert_eq!(h.len(), r);
    if n > cap {
        return Err(Error::TableCap(n, cap));
    }
    // regularity: every positive root must be nonzero at h
    let mut prod = Int::one();
    for root in &wg.rs.positive_roots {
        let v: i64 = (0..r).map(|k| root[k] * h[k]).sum();
        if v == 0 {
            return Err(Error::NonRegularPoint(format!("{root:?}")));
        }
        prod *= Int::from(v);
    }
    // alpha_i(t^{-1} h) = (t alpha_i)(h), column i of t's root matrix at h
    let mut orbit_denoms = vec![0i64; n * r];
    for t in 0..n {
        let m = &wg.elements[t].root_matrix;
        for i in 0..r {
            orbit_denoms[t * r + i] = (0..r).map(|k| m[k * r + i] * h[k]).sum();
        }
    }
    let signs: Vec<i64> = (0..n).map(|t| wg.sign(t)).collect();

    let mut rows: Vec<Option<(Vec<Int>, Int)>> = vec![None; n];
    // top row: P~_{w0}(t^{-1} h) = (-1)^{l(t)} prod / |W|
    {
        let nums: Vec<Int> = signs.iter().map(|&s| Int::from(s) * &prod).collect();
        rows[wg.w0] = Some(reduce_row(nums, Int::from(n as i64)));
    }
    for &w in wg.by_desc_length.iter().skip(1) {
        let i = (0..r)
            .find(|&i| wg.length(wg.right_mul[w][i]) > wg.length(w))
            .expect("every w != w0 has a right ascent");
        let ws = wg.right_mul[w][i];
        let (src_nums, src_den) = rows[ws]
            .as_ref()
            .map(|(a, b)| (a.clone(), b.clone()))
            .expect("longer row already built");
        let denom_at = |t: usize| -> i64 {
            match variant {
                DividedDifferenceVariant::Pointwise => orbit_denoms[t * r + i],
                DividedDifferenceVariant::ConstantDenominator => h[i],
            }
        };
        let mut lcm = Int::one();
        for t in 0..n {
            lcm = lcm.lcm(&Int::from(denom_at(t).abs()));
        }
        let nums: Vec<Int> = (0..n)
            .map(|t| {
                let ts = wg.right_mul[t][i];
                let diff = &src_nums[t] - &src_nums[ts];
                let scale = &lcm / Int::from(denom_at(t));
                diff * scale
            })
            .collect();
        rows[w] = Some(reduce_row(nums, src_den * lcm));
    }
    Ok(ValueTable {
        h: h.to_vec(),
        rows: rows.into_iter().map(|r| r.expect("all rows built")).collect(),
        prod_pos_roots_at_h: prod,
        signs,
        variant,
    })
}

fn reduce_row(nums: Vec<Int>, den: Int) -> (Vec<Int>, Int) {
    let mut g = den.abs();
    for x in &nums {
        if g.is_one() {
            break;
        }
        g = g.gcd(x);
    }
    if g.is_one() {
        if den.is_negative() {
            return (nums.into_iter().map(|x| -x).collect(), -den);
        }
        return (nums, den);
    }
    let sign = if den.is_negative() { -Int::one() } else { Int::one() };
    let g = g * sign;
    (nums.iter().map(|x| x / &g).collect(), den / g)
}

/// Integration functional applied to a product of basis rows:
/// `(1 / (|W| P~_{w0}(h))) * sum_t (-1)^{l(t)} prod_k row(w_k)[t]`.
pub fn psi_product(table: &ValueTable, wg: &WeylGroup, ws: &[usize]) -> Result<Rat> {
    let total: usize = ws.iter().map(|&w| wg.length(w)).sum();
    let lw0 = wg.length(wg.w0);
    if total > lw0 {
        return Err(Error::DegreeBound(total, lw0));
    }
    let n = wg.order();
    let mut sum = Int::zero();
    for t in 0..n {
        let mut term = Int::from(table.signs[t]);
        for &w in ws {
            if term.is_zero() {
                break;
            }
            term *= &table.rows[w].0[t];
        }
        sum += term;
    }
    let mut den = table.prod_pos_roots_at_h.clone();
    for &w in ws {
        den *= &table.rows[w].1;
    }
    Ok(Rat::new(sum, den))
}

/// A triple in (W^P)^3 with complementary dimension whose deformed product
/// is the point class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MovableTriple {
    /// 0-based index of the maximal parabolic.
    pub p_index: usize,
    pub triple: [usize; 3],
    pub coefficient: i64,
}

/// Structure constant: coefficient of the point class in
/// `[X^P_{v1}] . [X^P_{v2}] . [X^P_{v3}]`.
pub fn intersection_number(
    table: &ValueTable,
    wg: &WeylGroup,
    v: [usize; 3],
    p: &Parabolic,
) -> Result<Int> {
    for &vj in &v {
        assert!(p.contains_rep(vj), "triple entries must lie in W^P");
    }
    let total: usize = v.iter().map(|&vj| wg.length(vj)).sum();
    assert_eq!(total, 2 * p.dim_gp, "complementary dimension required");
    let rows: Vec<usize> = v
        .iter()
        .map(|&vj| wg.mul(wg.mul(wg.w0, vj), p.w0p))
        .collect();
    let c = psi_product(table, wg, &[rows[0], rows[1], rows[2], p.w0p])?;
    if !c.is_integer() {
        return Err(Error::NonIntegerConstant(c.to_string()));
    }
    let c = c.to_integer();
    if c.is_negative() {
        return Err(Error::NonIntegerConstant(format!("negative constant {c}")));
    }
    Ok(c)
}

/// chi-linearity part of the Levi-movability test.
fn chi_values_at_xi(wg: &WeylGroup, p: &Parabolic) -> (Vec<Rat>, Rat) {
    let xi = wg.rs.fundamental_coweight(p.omitted);
    let chi_at = |w: usize| -> Rat {
        wg.rs
            .pair(&chi(wg, w, p), &xi)
            .expect("same root system")
    };
    let per_rep: Vec<Rat> = p.min_reps.iter().map(|&v| chi_at(v)).collect();
    (per_rep, chi_at(0))
}

pub fn is_levi_movable(
    table: &ValueTable,
    wg: &WeylGroup,
    v: [usize; 3],
    p: &Parabolic,
) -> Result<bool> {
    let xi = wg.rs.fundamental_coweight(p.omitted);
    let mut s = Rat::zero();
    for &vj in &v {
        s += wg.rs.pair(&chi(wg, vj, p), &xi).expect("same root system");
    }
    s -= wg.rs.pair(&chi(wg, 0, p), &xi).expect("same root system");
    if !s.is_zero() {
        return Ok(false);
    }
    Ok(intersection_number(table, wg, v, p)?.is_one())
}

/// All ordered triples in (W^P)^3 of complementary dimension passing the
/// Levi-movability test, in canonical (min_reps index) order.
pub fn enumerate_movable_triples(
    table: &ValueTable,
    wg: &WeylGroup,
    p: &Parabolic,
) -> Result<Vec<MovableTriple>> {
    let reps = &p.min_reps;
    let m = reps.len();
    let n = wg.order();
    let target = 2 * p.dim_gp;
    let (chi_vals, chi_e) = chi_values_at_xi(wg, p);
    // table row and sign-fused "right factor" per rep: sign * row(w_v) * row(w0P)
    let row_ids: Vec<usize> = reps
        .iter()
        .map(|&v| wg.mul(wg.mul(wg.w0, v), p.w0p))
        .collect();
    let (w0p_nums, w0p_den) = table.row(p.w0p);
    let right: Vec<Vec<Int>> = row_ids
        .par_iter()
        .map(|&rid| {
            let (nums, _) = table.row(rid);
            (0..n)
                .map(|t| Int::from(table.signs[t]) * &nums[t] * &w0p_nums[t])
                .collect()
        })
        .collect();
    let by_len: Vec<Vec<usize>> = {
        let max_len = p.dim_gp;
        let mut bl = vec![Vec::new(); max_len + 1];
        for (k, &v) in reps.iter().enumerate() {
            bl[wg.length(v)].push(k);
        }
        bl
    };

    let found: Vec<MovableTriple> = (0..m)
        .into_par_iter()
        .flat_map_iter(|k1| {
            let mut local = Vec::new();
            let l1 = wg.length(reps[k1]);
            let (nums1, _) = table.row(row_ids[k1]);
            for k2 in 0..m {
                let l2 = wg.length(reps[k2]);
                if l1 + l2 > target || target - l1 - l2 > p.dim_gp {
                    continue;
                }
                let l3 = target - l1 - l2;
                let k3s = &by_len[l3];
                if k3s.is_empty() {
                    continue;
                }
                // chi pre-filter before touching the expensive product
                let chi12 = &chi_vals[k1] + &chi_vals[k2];
                let survivors: Vec<usize> = k3s
                    .iter()
                    .copied()
                    .filter(|&k3| (&chi12 + &chi_vals[k3] - &chi_e).is_zero())
                    .collect();
                if survivors.is_empty() {
                    continue;
                }
                let (nums2, _) = table.row(row_ids[k2]);
                let pair12: Vec<Int> = (0..n).map(|t| &nums1[t] * &nums2[t]).collect();
                for k3 in survivors {
                    let mut sum = Int::zero();
                    for t in 0..n {
                        sum += &pair12[t] * &right[k3][t];
                    }
                    // c = sum / (prod * den1 * den2 * den3 * den_w0p)
                    let mut den = table.prod_pos_roots_at_h.clone();
                    den *= &table.rows[row_ids[k1]].1;
                    den *= &table.rows[row_ids[k2]].1;
                    den *= &table.rows[row_ids[k3]].1;
                    den *= w0p_den;
                    let c = Rat::new(sum, den);
                    if !c.is_integer() {
                        panic!("non-integer structure constant {c}");
                    }
                    let ci = c.to_integer();
                    if ci.is_negative() {
                        panic!("negative structure constant {ci}");
                    }
                    if ci.is_one() {
                        local.push(MovableTriple {
                            p_index: p.omitted,
                            triple: [reps[k1], reps[k2], reps[k3]],
                            coefficient: 1,
                        });
                    }
                }
            }
            local
        })
        .collect();
    let mut found = found;
    let pos_of: std::collections::HashMap<usize, usize> =
        reps.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    found.sort_by_key(|mt| {
        [
            pos_of[&mt.triple[0]],
            pos_of[&mt.triple[1]],
            pos_of[&mt.triple[2]],
        ]
    });
    Ok(found)
}

/// The default regular evaluation point: the sum of the fundamental
/// coweights, where every root evaluates to its height.
pub fn default_h(rank: usize) -> Vec<i64> {
    vec![1; rank]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_root_system, TypeLetter};
    use crate::weyl::{enumerate_group, maximal_parabolic};

    fn table_for(t: TypeLetter, r: usize) -> (WeylGroup, ValueTable) {
        let wg = enumerate_group(build_root_system(t, r).unwrap()).unwrap();
        let table =
            build_value_table(&wg, &default_h(r), DividedDifferenceVariant::Pointwise).unwrap();
        (wg, table)
    }

    #[test]
    fn a1_rows_by_hand() {
        let (wg, table) = table_for(TypeLetter::A, 1);
        // P~_{w0}(h) = alpha(h)/2 = 1/2; signs (-1)^{l(t)}
        let half = Rat::new(Int::one(), Int::from(2));
        assert_eq!(table.value(wg.w0, 0), half);
        assert_eq!(table.value(wg.w0, wg.w0), -half);
        // P~_e is the constant 1
        assert_eq!(table.value(0, 0), Rat::one());
        assert_eq!(table.value(0, wg.w0), Rat::one());
    }

    #[test]
    fn psi_delta_property() {
        for (t, r) in [(TypeLetter::A, 2), (TypeLetter::C, 2), (TypeLetter::A, 3)] {
            let (wg, table) = table_for(t, r);
            for w in 0..wg.order() {
                let v = psi_product(&table, &wg, &[w]).unwrap();
                let expect = if w == wg.w0 { Rat::one() } else { Rat::zero() };
                assert_eq!(v, expect, "psi delta failed at w={w} in {:?}{r}", t);
            }
        }
    }

    #[test]
    fn duality_arbiter_accepts_pointwise() {
        for (t, r) in [(TypeLetter::A, 2), (TypeLetter::A, 3), (TypeLetter::C, 2)] {
            let (wg, table) = table_for(t, r);
            let lw0 = wg.length(wg.w0);
            for u in 0..wg.order() {
                let dual = wg.mul(wg.w0, u);
                assert_eq!(psi_product(&table, &wg, &[u, dual]).unwrap(), Rat::one());
                for v in 0..wg.order() {
                    if wg.length(v) + wg.length(u) == lw0 && v != dual {
                        assert_eq!(
                            psi_product(&table, &wg, &[u, v]).unwrap(),
                            Rat::zero()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn duality_arbiter_rejects_constant_denominator() {
        let wg = enumerate_group(build_root_system(TypeLetter::A, 2).unwrap()).unwrap();
        let table = build_value_table(
            &wg,
            &default_h(2),
            DividedDifferenceVariant::ConstantDenominator,
        )
        .unwrap();
        let violated = (0..wg.order()).any(|u| {
            psi_product(&table, &wg, &[u, wg.mul(wg.w0, u)]).unwrap() != Rat::one()
        });
        assert!(violated, "constant-denominator variant unexpectedly passed");
    }

    #[test]
    fn homogeneity_under_scaling() {
        for (t, r) in [(TypeLetter::A, 3), (TypeLetter::C, 2)] {
            let wg = enumerate_group(build_root_system(t, r).unwrap()).unwrap();
            let t1 =
                build_value_table(&wg, &vec![1; r], DividedDifferenceVariant::Pointwise).unwrap();
            let t2 =
                build_value_table(&wg, &vec![2; r], DividedDifferenceVariant::Pointwise).unwrap();
            for w in 0..wg.order() {
                let factor = Rat::from(Int::from(2)).pow(wg.length(w) as i32);
                for s in 0..wg.order() {
                    assert_eq!(t2.value(w, s), t1.value(w, s) * &factor);
                }
            }
        }
    }

    #[test]
    fn rejects_non_regular_h() {
        let wg = enumerate_group(build_root_system(TypeLetter::A, 2).unwrap()).unwrap();
        let err = build_value_table(&wg, &[1, -1], DividedDifferenceVariant::Pointwise);
        assert!(matches!(err, Err(Error::NonRegularPoint(_))));
    }

    #[test]
    fn p2_lines_meet_in_a_point() {
        let (wg, table) = table_for(TypeLetter::A, 2);
        let p = maximal_parabolic(&wg, 0);
        // reps of lengths 0,1,2 on P^2; codims 2,1,0
        let by_len = |l: usize| {
            p.min_reps
                .iter()
                .copied()
                .find(|&v| wg.length(v) == l)
                .unwrap()
        };
        let (v0, v1, v2) = (by_len(0), by_len(1), by_len(2));
        // two hyperplanes and the fundamental class
        let c = intersection_number(&table, &wg, [v1, v1, v2], &p).unwrap();
        assert_eq!(c, Int::one());
        // point . fundamental . fundamental
        let c = intersection_number(&table, &wg, [v0, v2, v2], &p).unwrap();
        assert_eq!(c, Int::one());
    }

    #[test]
    fn wp_poincare_duality() {
        // (v, v_dual, top) has coefficient 1 on every G/P, rank <= 3
        for (t, r) in [(TypeLetter::A, 3), (TypeLetter::C, 3)] {
            let (wg, table) = table_for(t, r);
            for i in 0..r {
                let p = maximal_parabolic(&wg, i);
                let top = *p.min_reps.last().unwrap();
                assert_eq!(wg.length(top), p.dim_gp);
                for &v in &p.min_reps {
                    // W^P-dual of v: w0 v w0P
                    let vd = wg.mul(wg.mul(wg.w0, v), p.w0p);
                    assert!(p.contains_rep(vd));
                    let c = intersection_number(&table, &wg, [v, vd, top], &p).unwrap();
                    assert_eq!(c, Int::one(), "duality failed on P_{i} of {:?}{r}", t);
                }
            }
        }
    }

    #[test]
    fn h_independence_of_intersection_numbers() {
        let wg = enumerate_group(build_root_system(TypeLetter::C, 2).unwrap()).unwrap();
        let t1 = build_value_table(&wg, &[1, 1], DividedDifferenceVariant::Pointwise).unwrap();
        let t2 = build_value_table(&wg, &[3, 5], DividedDifferenceVariant::Pointwise).unwrap();
        for i in 0..2 {
            let p = maximal_parabolic(&wg, i);
            for &v1 in &p.min_reps {
                for &v2 in &p.min_reps {
                    for &v3 in &p.min_reps {
                        let total = wg.length(v1) + wg.length(v2) + wg.length(v3);
                        if total != 2 * p.dim_gp {
                            continue;
                        }
                        let c1 = intersection_number(&t1, &wg, [v1, v2, v3], &p).unwrap();
                        let c2 = intersection_number(&t2, &wg, [v1, v2, v3], &p).unwrap();
                        assert_eq!(c1, c2);
                    }
                }
            }
        }
    }

    #[test]
    fn movable_triple_counts_small() {
        // A_1: 3 ordered movable triples over the single parabolic
        let (wg, table) = table_for(TypeLetter::A, 1);
        let p = maximal_parabolic(&wg, 0);
        let triples = enumerate_movable_triples(&table, &wg, &p).unwrap();
        assert_eq!(triples.len(), 3);
        // A_2: 12 total over both parabolics
        let (wg, table) = table_for(TypeLetter::A, 2);
        let total: usize = (0..2)
            .map(|i| {
                let p = maximal_parabolic(&wg, i);
                enumerate_movable_triples(&table, &wg, &p).unwrap().len()
            })
            .sum();
        assert_eq!(total, 12);
    }

    #[test]
    fn movable_triples_deterministic_across_thread_counts() {
        let (wg, table) = table_for(TypeLetter::A, 3);
        let p = maximal_parabolic(&wg, 1);
        let a = enumerate_movable_triples(&table, &wg, &p).unwrap();
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let b = pool.install(|| enumerate_movable_triples(&table, &wg, &p).unwrap());
        assert_eq!(a, b);
    }
}
