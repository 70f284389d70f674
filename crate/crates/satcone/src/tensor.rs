//! Representation-theoretic verification side: Weyl dimensions, dominant
//! characters (Freudenthal), tensor decompositions (Klimyk), invariant
//! dimensions (Steinberg), R(G)-membership, and Fulton scaling profiles.

use crate::rootsys::{RootSystem, TypeLetter, Weight};
use crate::weyl::{levi_factors, WeylGroup};
use crate::{Error, Int, Rat, Result};
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;

/// Default refusal threshold for the product dimension of a decomposition.
pub const DEFAULT_DIM_CAP: u64 = 10_000_000;

/// Squared-length ratio `(alpha_j, alpha_j)/2` in the normalization where
/// short roots have squared length 2.
fn root_scale(rs: &RootSystem, j: usize) -> i64 {
    match rs.type_letter {
        TypeLetter::C if j == rs.rank - 1 => 2,
        _ => 1,
    }
}

/// Invariant form `(lambda, mu)` from omega-coordinates of `lambda` and
/// root coordinates of `mu`.
fn form(rs: &RootSystem, lam_omega: &[Rat], mu_root: &[Rat]) -> Rat {
    (0..rs.rank)
        .map(|j| Rat::from(Int::from(root_scale(rs, j))) * &lam_omega[j] * &mu_root[j])
        .sum()
}

fn form_weights(rs: &RootSystem, a: &Weight, b: &Weight) -> Rat {
    form(rs, &a.coords, &rs.weight_to_root_coords(b))
}

/// `(lambda, alpha^vee)` for a positive root in simple-root coordinates.
fn pair_coroot(rs: &RootSystem, lam: &Weight, root: &[i64]) -> Rat {
    let root_rat: Vec<Rat> = root.iter().map(|&c| Rat::from(Int::from(c))).collect();
    let num = form(rs, &lam.coords, &root_rat);
    // (alpha, alpha)/2
    let alpha_omega = rs.root_to_weight(root);
    let half_len = form(rs, &alpha_omega.coords, &root_rat)
        / Rat::from(Int::from(2));
    num / half_len
}

/// Weyl dimension formula.
pub fn weyl_dim(rs: &RootSystem, lam: &Weight) -> Result<Int> {
    if !lam.is_dominant() || !lam.is_integral() {
        return Err(Error::NonDominant(
            lam.coords.iter().map(|c| c.numer().clone()).collect(),
        ));
    }
    let lam_rho = lam.add(&rs.rho);
    let mut num = Rat::one();
    for root in &rs.positive_roots {
        num *= pair_coroot(rs, &lam_rho, root) / pair_coroot(rs, &rs.rho, root);
    }
    assert!(num.is_integer(), "Weyl dimension must be integral");
    Ok(num.to_integer())
}

/// Dominant weights with their multiplicities.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub highest: Weight,
    /// Keyed by integral omega-coordinates.
    pub mults: BTreeMap<Vec<i64>, Int>,
}

fn key_of(w: &Weight) -> Option<Vec<i64>> {
    w.coords
        .iter()
        .map(|c| c.is_integer().then(|| c.to_integer().to_i64()).flatten())
        .collect()
}

fn weight_from_key(k: &[i64]) -> Weight {
    Weight::from_ints(k)
}

/// Dominant representative of a weight under W, by simple reflections.
fn dominant_rep(rs: &RootSystem, w: &Weight) -> Weight {
    let mut cur = w.clone();
    loop {
        let Some(i) = cur.coords.iter().position(|c| c.is_negative()) else {
            return cur;
        };
        // s_i: c_j -> c_j - c_i * cartan[j][i]
        let ci = cur.coords[i].clone();
        for j in 0..rs.rank {
            cur.coords[j] -= &ci * Rat::from(Int::from(rs.cartan[j][i]));
        }
    }
}

/// Stabilizer-aware W-orbit size of a dominant weight, via the order formula
/// for the standard parabolic fixing it.
pub fn orbit_size(rs: &RootSystem, wg_order: usize, dominant: &Weight) -> usize {
    let zero_nodes: Vec<usize> = (0..rs.rank)
        .filter(|&i| dominant.coords[i].is_zero())
        .collect();
    let mut stab: usize = 1;
    for f in levi_factors(rs, &zero_nodes) {
        let fac: usize = (1..=f.rank).product();
        stab *= match f.letter {
            TypeLetter::A => (1..=f.rank + 1).product(),
            TypeLetter::C => (1usize << f.rank) * fac,
            TypeLetter::D => (1usize << (f.rank - 1)) * fac,
        };
    }
    wg_order / stab
}

/// Freudenthal's recursion over the dominant weight poset.
pub fn dominant_character(rs: &RootSystem, lam: &Weight) -> Result<CharacterTable> {
    if !lam.is_dominant() || !lam.is_integral() {
        return Err(Error::NonDominant(
            lam.coords.iter().map(|c| c.numer().clone()).collect(),
        ));
    }
    let r = rs.rank;
    // box bound: k = C^{-1}(lam - mu) has k_j <= (C^{-1} lam)_j since the
    // inverse Cartan is entrywise positive for connected A/C/D
    let lam_root = rs.weight_to_root_coords(lam);
    let bounds: Vec<i64> = lam_root.iter().map(|b| b.floor().to_integer().to_i64().unwrap()).collect();
    let mut dominants: Vec<(Vec<i64>, Vec<i64>)> = Vec::new(); // (k, mu key)
    let mut k = vec![0i64; r];
    'outer: loop {
        // mu = lam - sum k_j alpha_j
        let mut mu = lam.clone();
        for j in 0..r {
            if k[j] != 0 {
                let aj = rs.simple_root_weight(j);
                for t in 0..r {
                    mu.coords[t] -= Rat::from(Int::from(k[j])) * &aj.coords[t];
                }
            }
        }
        if mu.is_dominant() {
            dominants.push((k.clone(), key_of(&mu).expect("integral")));
        }
        let mut i = 0;
        loop {
            if i == r {
                break 'outer;
            }
            k[i] += 1;
            if k[i] <= bounds[i] {
                break;
            }
            k[i] = 0;
            i += 1;
        }
    }
    // order by increasing depth below lam
    dominants.sort_by_key(|(k, _)| (k.iter().sum::<i64>(), k.clone()));
    let lam_rho = lam.add(&rs.rho);
    let c_top = form_weights(rs, &lam_rho, &lam_rho);
    let mut mults: BTreeMap<Vec<i64>, Int> = BTreeMap::new();
    for (_, mu_key) in &dominants {
        let mu = weight_from_key(mu_key);
        if mu_key == &key_of(lam).unwrap() {
            mults.insert(mu_key.clone(), Int::one());
            continue;
        }
        let mut sum = Rat::zero();
        for root in &rs.positive_roots {
            let alpha = rs.root_to_weight(root);
            let alpha_root: Vec<Rat> =
                root.iter().map(|&c| Rat::from(Int::from(c))).collect();
            let mut step = mu.add(&alpha);
            let mut depth = 1i64;
            loop {
                // stop once lam - step leaves the positive root cone
                let diff_root = rs.weight_to_root_coords(&lam.sub(&step));
                if diff_root.iter().any(|c| c.is_negative()) {
                    break;
                }
                let rep = dominant_rep(rs, &step);
                if let Some(rep_key) = key_of(&rep) {
                    if let Some(m) = mults.get(&rep_key) {
                        // (mu + depth*alpha, alpha)
                        let val = form(rs, &step.coords, &alpha_root);
                        sum += Rat::from(m.clone()) * val;
                    }
                }
                step = step.add(&alpha);
                depth += 1;
                if depth > 10_000 {
                    unreachable!("runaway root string");
                }
            }
        }
        if sum.is_zero() {
            continue; // not a weight
        }
        let mu_rho = mu.add(&rs.rho);
        let denom = &c_top - form_weights(rs, &mu_rho, &mu_rho);
        let m = Rat::from(Int::from(2)) * sum / denom;
        assert!(m.is_integer() && m.is_positive(), "Freudenthal output invalid");
        mults.insert(mu_key.clone(), m.to_integer());
    }
    Ok(CharacterTable {
        highest: lam.clone(),
        mults,
    })
}

impl CharacterTable {
    /// Multiplicity of an arbitrary (possibly non-dominant) weight.
    pub fn mult(&self, rs: &RootSystem, w: &Weight) -> Int {
        let rep = dominant_rep(rs, w);
        match key_of(&rep) {
            Some(k) => self.mults.get(&k).cloned().unwrap_or_else(Int::zero),
            None => Int::zero(),
        }
    }

    /// Character sum over full W-orbits; must equal the Weyl dimension.
    pub fn total_dim(&self, rs: &RootSystem, wg_order: usize) -> Int {
        self.mults
            .iter()
            .map(|(k, m)| {
                let w = weight_from_key(k);
                Int::from(orbit_size(rs, wg_order, &w) as i64) * m
            })
            .sum()
    }
}

/// Full W-orbit of a dominant weight.
fn orbit(rs: &RootSystem, dominant: &Weight) -> Vec<Weight> {
    let mut seen: BTreeMap<Vec<Rat>, Weight> = BTreeMap::new();
    let mut queue = vec![dominant.clone()];
    seen.insert(dominant.coords.clone(), dominant.clone());
    while let Some(w) = queue.pop() {
        for i in 0..rs.rank {
            if w.coords[i].is_zero() {
                continue;
            }
            let mut img = w.clone();
            let ci = img.coords[i].clone();
            for j in 0..rs.rank {
                img.coords[j] -= &ci * Rat::from(Int::from(rs.cartan[j][i]));
            }
            if !seen.contains_key(&img.coords) {
                seen.insert(img.coords.clone(), img.clone());
                queue.push(img);
            }
        }
    }
    seen.into_values().collect()
}

/// Multiplicities of `V(nu)` in `V(lam) x V(mu)` for all dominant `nu`,
/// by the Klimyk formula over the character of the smaller factor.
pub fn tensor_decompose(
    rs: &RootSystem,
    lam: &Weight,
    mu: &Weight,
    dim_cap: u64,
) -> Result<BTreeMap<Vec<i64>, Int>> {
    let dl = weyl_dim(rs, lam)?;
    let dm = weyl_dim(rs, mu)?;
    let prod = &dl * &dm;
    if prod > Int::from(dim_cap) {
        return Err(Error::DimensionCap(format!(
            "product dimension {prod} exceeds cap {dim_cap}"
        )));
    }
    let (big, small) = if dl >= dm { (lam, mu) } else { (mu, lam) };
    let ct = dominant_character(rs, small)?;
    let big_rho = big.add(&rs.rho);
    let mut out: BTreeMap<Vec<i64>, Int> = BTreeMap::new();
    for (k, m) in &ct.mults {
        let dom = weight_from_key(k);
        for w in orbit(rs, &dom) {
            let target = big_rho.add(&w);
            // dominant-conjugate with sign; singular points discarded
            let (rep, sign, regular) = signed_dominant_rep(rs, &target);
            if !regular {
                continue;
            }
            let nu = rep.sub(&rs.rho);
            debug_assert!(nu.is_dominant());
            let key = key_of(&nu).expect("integral");
            let entry = out.entry(key).or_insert_with(Int::zero);
            *entry += Int::from(sign) * m;
        }
    }
    out.retain(|_, v| {
        assert!(!v.is_negative(), "negative multiplicity escaped cancellation");
        !v.is_zero()
    });
    Ok(out)
}

/// Strictly-dominant representative with the sign of the conjugating
/// element; `regular = false` when the weight lies on a wall.
fn signed_dominant_rep(rs: &RootSystem, w: &Weight) -> (Weight, i64, bool) {
    let mut cur = w.clone();
    let mut sign = 1i64;
    loop {
        if cur.coords.iter().any(|c| c.is_zero()) {
            return (cur, 0, false);
        }
        let Some(i) = cur.coords.iter().position(|c| c.is_negative()) else {
            return (cur, sign, true);
        };
        let ci = cur.coords[i].clone();
        for j in 0..rs.rank {
            cur.coords[j] -= &ci * Rat::from(Int::from(rs.cartan[j][i]));
        }
        sign = -sign;
    }
}

/// `dim (V(l1) x V(l2) x V(l3))^G`: the multiplicity of the dual of `l3`
/// in `V(l1) x V(l2)`, evaluated by Steinberg's single-target formula over
/// the character of the smallest of the three factors.
pub fn invariant_dim(
    wg: &WeylGroup,
    lams: &[Weight; 3],
    dim_cap: u64,
) -> Result<Int> {
    let rs = &wg.rs;
    let dims: Vec<Int> = lams
        .iter()
        .map(|l| weyl_dim(rs, l))
        .collect::<Result<_>>()?;
    // the cost driver is the character of the smallest factor, not the
    // triple product dimension
    let smallest = (0..3).min_by_key(|&i| dims[i].clone()).unwrap();
    if dims[smallest] > Int::from(dim_cap) {
        return Err(Error::DimensionCap(format!(
            "smallest factor dimension {} exceeds cap {dim_cap}",
            dims[smallest]
        )));
    }
    let (a, b) = match smallest {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    // N_nu with lam = lams[a], mu = lams[smallest], nu = dual(lams[b])
    let lam = &lams[a];
    let mu = &lams[smallest];
    let nu = wg.dual_weight(&lams[b]);
    let ct = dominant_character(rs, mu)?;
    let lam_rho = lam.add(&rs.rho);
    let nu_rho = nu.add(&rs.rho);
    let mut acc = Int::zero();
    for w in 0..wg.order() {
        let img = wg.act_on_weight(w, &nu_rho);
        let m = ct.mult(rs, &img.sub(&lam_rho));
        if !m.is_zero() {
            acc += Int::from(wg.sign(w)) * m;
        }
    }
    assert!(!acc.is_negative(), "invariant dimension must be nonnegative");
    Ok(acc)
}

/// `[invariant_dim(N * lams) for N in 1..=n_max]`.
pub fn fulton_profile(
    wg: &WeylGroup,
    lams: &[Weight; 3],
    n_max: i64,
    dim_cap: u64,
) -> Result<Vec<Int>> {
    (1..=n_max)
        .map(|n| {
            let scaled = [
                lams[0].scale(n),
                lams[1].scale(n),
                lams[2].scale(n),
            ];
            invariant_dim(wg, &scaled, dim_cap)
        })
        .collect()
}

/// Membership in the unsaturated tensor cone R(G): a nonzero invariant at
/// N = 1. Precondition: dominant integral triple with sum in the root
/// lattice (otherwise trivially false).
pub fn in_r(wg: &WeylGroup, lams: &[Weight; 3], dim_cap: u64) -> Result<bool> {
    let sum = lams[0].add(&lams[1]).add(&lams[2]);
    if !wg.rs.in_root_lattice(&sum) {
        return Ok(false);
    }
    Ok(invariant_dim(wg, lams, dim_cap)?.is_positive())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;
    use crate::weyl::enumerate_group;

    fn rs_of(t: TypeLetter, r: usize) -> RootSystem {
        build_root_system(t, r).unwrap()
    }

    #[test]
    fn weyl_dims() {
        let a1 = rs_of(TypeLetter::A, 1);
        assert_eq!(weyl_dim(&a1, &Weight::from_ints(&[1])).unwrap(), Int::from(2));
        assert_eq!(weyl_dim(&a1, &Weight::zero(1)).unwrap(), Int::one());
        let a2 = rs_of(TypeLetter::A, 2);
        assert_eq!(
            weyl_dim(&a2, &Weight::from_ints(&[1, 1])).unwrap(),
            Int::from(8)
        );
        let d5 = rs_of(TypeLetter::D, 5);
        assert_eq!(
            weyl_dim(&d5, &Weight::fundamental(5, 1)).unwrap(),
            Int::from(45)
        );
        assert_eq!(
            weyl_dim(&d5, &Weight::fundamental(5, 0)).unwrap(),
            Int::from(10)
        );
        let d6 = rs_of(TypeLetter::D, 6);
        assert_eq!(
            weyl_dim(&d6, &Weight::fundamental(6, 3)).unwrap(),
            Int::from(495)
        );
        let c3 = rs_of(TypeLetter::C, 3);
        assert_eq!(
            weyl_dim(&c3, &Weight::fundamental(3, 0)).unwrap(),
            Int::from(6)
        );
        assert!(weyl_dim(&a1, &Weight::from_ints(&[-1])).is_err());
    }

    #[test]
    fn characters_small() {
        let a1 = rs_of(TypeLetter::A, 1);
        let ct = dominant_character(&a1, &Weight::from_ints(&[2])).unwrap();
        assert_eq!(ct.mults.len(), 2);
        assert_eq!(ct.mults[&vec![2]], Int::one());
        assert_eq!(ct.mults[&vec![0]], Int::one());
        // adjoint zero-weight multiplicity = rank
        for (t, r) in [(TypeLetter::A, 2), (TypeLetter::C, 2), (TypeLetter::D, 4)] {
            let rs = rs_of(t, r);
            let highest = rs
                .positive_roots
                .iter()
                .max_by_key(|root| crate::rootsys::RootSystem::height(root))
                .unwrap();
            let adj = rs.root_to_weight(highest);
            let ct = dominant_character(&rs, &adj).unwrap();
            assert_eq!(ct.mults[&vec![0; r]], Int::from(r as i64));
        }
        // D_5 vector rep: single dominant weight, orbit 10
        let d5 = rs_of(TypeLetter::D, 5);
        let ct = dominant_character(&d5, &Weight::fundamental(5, 0)).unwrap();
        assert_eq!(ct.mults.len(), 1);
        let wg_order = 1920;
        assert_eq!(ct.total_dim(&d5, wg_order), Int::from(10));
    }

    #[test]
    fn character_dimension_invariant() {
        for (t, r, order) in [
            (TypeLetter::A, 3, 24usize),
            (TypeLetter::C, 3, 48),
            (TypeLetter::D, 4, 192),
        ] {
            let rs = rs_of(t, r);
            for lam in [
                Weight::from_ints(&vec![1; r]),
                Weight::fundamental(r, r - 1).scale(2),
            ] {
                let ct = dominant_character(&rs, &lam).unwrap();
                assert_eq!(ct.total_dim(&rs, order), weyl_dim(&rs, &lam).unwrap());
            }
        }
    }

    #[test]
    fn clebsch_gordan() {
        let a1 = rs_of(TypeLetter::A, 1);
        let w = Weight::from_ints(&[1]);
        let dec = tensor_decompose(&a1, &w, &w, DEFAULT_DIM_CAP).unwrap();
        assert_eq!(dec.len(), 2);
        assert_eq!(dec[&vec![2]], Int::one());
        assert_eq!(dec[&vec![0]], Int::one());
    }

    #[test]
    fn a2_three_times_threebar() {
        let a2 = rs_of(TypeLetter::A, 2);
        let dec = tensor_decompose(
            &a2,
            &Weight::fundamental(2, 0),
            &Weight::fundamental(2, 1),
            DEFAULT_DIM_CAP,
        )
        .unwrap();
        assert_eq!(dec.len(), 2);
        assert_eq!(dec[&vec![1, 1]], Int::one());
        assert_eq!(dec[&vec![0, 0]], Int::one());
    }

    #[test]
    fn decomposition_dimension_conservation() {
        for (t, r) in [(TypeLetter::A, 2), (TypeLetter::C, 2), (TypeLetter::D, 4)] {
            let rs = rs_of(t, r);
            let pairs = [
                (Weight::from_ints(&vec![1; r]), Weight::fundamental(r, 0)),
                (Weight::fundamental(r, r - 1), Weight::fundamental(r, r - 1)),
            ];
            for (lam, mu) in pairs {
                let dec = tensor_decompose(&rs, &lam, &mu, DEFAULT_DIM_CAP).unwrap();
                let total: Int = dec
                    .iter()
                    .map(|(k, m)| m * weyl_dim(&rs, &Weight::from_ints(k)).unwrap())
                    .sum();
                let expect =
                    weyl_dim(&rs, &lam).unwrap() * weyl_dim(&rs, &mu).unwrap();
                assert_eq!(total, expect, "dimension loss in {:?}{r}", t);
            }
        }
    }

    #[test]
    fn invariant_dims_basic() {
        let wg = enumerate_group(rs_of(TypeLetter::A, 1)).unwrap();
        let zero = Weight::zero(1);
        assert_eq!(
            invariant_dim(&wg, &[zero.clone(), zero.clone(), zero.clone()], DEFAULT_DIM_CAP)
                .unwrap(),
            Int::one()
        );
        let w = Weight::from_ints(&[1]);
        assert_eq!(
            invariant_dim(&wg, &[w.clone(), w.clone(), Weight::from_ints(&[2])], DEFAULT_DIM_CAP)
                .unwrap(),
            Int::one()
        );
        assert!(in_r(&wg, &[w.clone(), w.clone(), Weight::from_ints(&[2])], DEFAULT_DIM_CAP).unwrap());
        // parity violation
        assert!(!in_r(&wg, &[w.clone(), zero.clone(), zero], DEFAULT_DIM_CAP).unwrap());
    }

    #[test]
    fn invariant_dim_symmetric() {
        let wg = enumerate_group(rs_of(TypeLetter::A, 2)).unwrap();
        let a = Weight::from_ints(&[2, 0]);
        let b = Weight::from_ints(&[1, 1]);
        let c = Weight::from_ints(&[0, 2]);
        let base = invariant_dim(&wg, &[a.clone(), b.clone(), c.clone()], DEFAULT_DIM_CAP).unwrap();
        for perm in [
            [a.clone(), c.clone(), b.clone()],
            [b.clone(), a.clone(), c.clone()],
            [c.clone(), b.clone(), a.clone()],
        ] {
            assert_eq!(
                invariant_dim(&wg, &perm, DEFAULT_DIM_CAP).unwrap(),
                base
            );
        }
    }

    #[test]
    fn fulton_profiles_a1() {
        let wg = enumerate_group(rs_of(TypeLetter::A, 1)).unwrap();
        let w = Weight::from_ints(&[1]);
        let profile = fulton_profile(
            &wg,
            &[w.clone(), w, Weight::zero(1)],
            4,
            DEFAULT_DIM_CAP,
        )
        .unwrap();
        assert_eq!(profile, vec![Int::one(); 4]);
    }

    #[test]
    fn invariant_matches_decomposition() {
        let wg = enumerate_group(rs_of(TypeLetter::C, 2)).unwrap();
        let rs = &wg.rs;
        let a = Weight::from_ints(&[1, 1]);
        let b = Weight::from_ints(&[0, 1]);
        let dec = tensor_decompose(rs, &a, &b, DEFAULT_DIM_CAP).unwrap();
        for (k, m) in &dec {
            let nu = Weight::from_ints(k);
            let triple = [a.clone(), b.clone(), wg.dual_weight(&nu)];
            assert_eq!(&invariant_dim(&wg, &triple, DEFAULT_DIM_CAP).unwrap(), m);
        }
    }
}
