//! Extremal-ray generators of the tensor cone from facet data: the Type I
//! Bruhat-cover formula and the Type II induction of Levi-cone rays.

use crate::cone::{generate_cone_capped, ConeDescription};
use crate::matrix::{primitive_i64, rat_solve};
use crate::polyhedral::{extremal_filter, HPolyhedron};
use crate::rootsys::{build_root_system, TypeLetter, Weight};
use crate::schubert::{intersection_number, ValueTable, DEFAULT_TABLE_CAP};
use crate::weyl::{
    enumerate_group, maximal_parabolic, Parabolic, WeylGroup,
};
use crate::{Int, Rat, Result};
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use std::collections::{BTreeMap, BTreeSet, HashMap};

/// A regular facet: a maximal parabolic with a Levi-movable triple on it.
#[derive(Debug, Clone)]
pub struct FacetData {
    pub p_index: usize,
    pub triple: [usize; 3],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RayProvenance {
    TypeI {
        p_index: usize,
        triple: [usize; 3],
        /// Triple slot j and simple root l of the cover `v -> w_j`.
        j: usize,
        l: usize,
    },
    TypeII {
        p_index: usize,
        triple: [usize; 3],
        levi_ray: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RayTriple {
    /// Length 3r, primitive, omega-coordinate blocks (lambda1|lambda2|lambda3).
    pub coords: Vec<i64>,
    pub provenance: RayProvenance,
}

/// The (j, l) pairs admitting a downward cover `s_l w_j -> w_j` inside W^P.
fn cover_pairs(wg: &WeylGroup, p: &Parabolic, triple: &[usize; 3]) -> Vec<(usize, usize, usize)> {
    let r = wg.rank();
    let mut out = Vec::new();
    for j in 0..3 {
        let wj = triple[j];
        for l in 0..r {
            let v = wg.left_mul[wj][l];
            if wg.length(v) + 1 == wg.length(wj) && p.contains_rep(v) {
                out.push((j, l, v));
            }
        }
    }
    out
}

/// Type I rays of a facet: one candidate per Bruhat cover into the triple.
pub fn type1_rays(
    table: &ValueTable,
    wg: &WeylGroup,
    p: &Parabolic,
    fd: &FacetData,
) -> Result<Vec<RayTriple>> {
    let r = wg.rank();
    let mut out = Vec::new();
    for (j, l, v) in cover_pairs(wg, p, &fd.triple) {
        let mut u = fd.triple;
        u[j] = v;
        let mut coords = vec![0i64; 3 * r];
        for i in 0..3 {
            for k in 0..r {
                if let Some(ui_up) = crate::weyl::left_simple_cover(wg, u[i], k, p) {
                    let mut uhat = u;
                    uhat[i] = ui_up;
                    let c = intersection_number(table, wg, uhat, p)?;
                    coords[i * r + k] = c.to_i64().expect("small structure constant");
                }
            }
        }
        if coords.iter().any(|&x| x != 0) {
            out.push(RayTriple {
                coords: primitive_i64(&coords),
                provenance: RayProvenance::TypeI {
                    p_index: fd.p_index,
                    triple: fd.triple,
                    j,
                    l,
                },
            });
        }
    }
    Ok(out)
}

/// Extend a Levi weight to the parent: the unique element of
/// `span{alpha_j : j in Delta(P)}` with the prescribed pairings against the
/// Levi's simple coroots. `levi_coords[k]` pairs with node `p.delta_p`-th...
/// keyed by parent node index.
pub fn extend_levi_weight(
    rs: &crate::rootsys::RootSystem,
    p: &Parabolic,
    pairings: &BTreeMap<usize, Rat>,
) -> Weight {
    let nodes = &p.delta_p;
    let m = nodes.len();
    if m == 0 {
        return Weight::zero(rs.rank);
    }
    // solve sum_j b_j alpha_j(alpha_k^vee) = mu_k over the Levi nodes
    let a: Vec<Vec<Rat>> = nodes
        .iter()
        .map(|&k| {
            nodes
                .iter()
                .map(|&j| Rat::from(Int::from(rs.cartan[k][j])))
                .collect()
        })
        .collect();
    let b: Vec<Rat> = nodes
        .iter()
        .map(|&k| pairings.get(&k).cloned().unwrap_or_else(Rat::zero))
        .collect();
    let sol = rat_solve(&a, &b).expect("Levi Cartan block is invertible");
    let mut coords = vec![Rat::zero(); rs.rank];
    for (idx, &j) in nodes.iter().enumerate() {
        let alpha_j = rs.simple_root_weight(j);
        for t in 0..rs.rank {
            coords[t] += &sol[idx] * &alpha_j.coords[t];
        }
    }
    Weight { coords }
}

/// Type II induction of a Levi triple along a facet, given the facet's
/// Type I rays: `Ind(mu) = (w_j mu_j)_j - sum_{j,l} (w_j mu_j)(alpha_l^vee) r_{j,l}`.
/// Returns `None` for the zero vector.
pub fn induce(
    wg: &WeylGroup,
    p: &Parabolic,
    fd: &FacetData,
    type1: &[RayTriple],
    mus: &[Weight; 3],
) -> Option<Vec<i64>> {
    let r = wg.rank();
    let mut acc = vec![Rat::zero(); 3 * r];
    let moved: Vec<Weight> = (0..3)
        .map(|j| wg.act_on_weight(fd.triple[j], &mus[j]))
        .collect();
    for j in 0..3 {
        for k in 0..r {
            acc[j * r + k] += &moved[j].coords[k];
        }
    }
    for ray in type1 {
        let RayProvenance::TypeI { j, l, .. } = ray.provenance else {
            continue;
        };
        // pairing (w_j mu_j)(alpha_l^vee) = omega-coordinate l
        let coeff = moved[j].coords[l].clone();
        if coeff.is_zero() {
            continue;
        }
        for t in 0..3 * r {
            acc[t] -= &coeff * Rat::from(Int::from(ray.coords[t]));
        }
    }
    let _ = p;
    if acc.iter().all(|x| x.is_zero()) {
        return None;
    }
    let ints = crate::matrix::primitive_from_rat(&acc);
    if ints.iter().any(|x| x.is_negative()) {
        // a candidate outside the dominant chamber is never a cone ray
        return None;
    }
    Some(ints.iter().map(|x| x.to_i64().expect("desk scale")).collect())
}

/// Extremal rays of `C(letter_rank)` as flat 3r-vectors, computed by the
/// same facet-formula pipeline, recursively through the Levi structure.
pub fn extremal_rays_of_type(
    letter: TypeLetter,
    rank: usize,
    cache: &mut HashMap<(char, usize), Vec<Vec<i64>>>,
) -> Result<Vec<Vec<i64>>> {
    let key = (letter.as_char(), rank);
    if let Some(r) = cache.get(&key) {
        return Ok(r.clone());
    }
    let wg = enumerate_group(build_root_system(letter, rank)?)?;
    let cd = generate_cone_capped(&wg, DEFAULT_TABLE_CAP)?;
    let table = crate::cone::cone_value_table(&wg, DEFAULT_TABLE_CAP)?;
    let gens = all_ray_generators(&wg, &cd, &table, cache)?;
    let hp = HPolyhedron::from_rows(cd.dim, cd.all_rows());
    let flat: Vec<Vec<Int>> = gens
        .iter()
        .map(|g| g.coords.iter().map(|&x| Int::from(x)).collect())
        .collect();
    let extremal: Vec<Vec<i64>> = extremal_filter(&hp, &flat)
        .iter()
        .map(|r| r.iter().map(|x| x.to_i64().expect("desk scale")).collect())
        .collect();
    cache.insert(key, extremal.clone());
    Ok(extremal)
}

/// Extremal rays of the semisimple Levi cone `C(L^ss)`, as triples of weight
/// coordinate maps keyed by parent node. Product cones contribute each
/// factor's rays padded by zero on the other factors.
fn levi_cone_rays(
    p: &Parabolic,
    cache: &mut HashMap<(char, usize), Vec<Vec<i64>>>,
) -> Result<Vec<[BTreeMap<usize, Rat>; 3]>> {
    let mut out = Vec::new();
    for f in &p.levi_factors {
        let factor_rays = extremal_rays_of_type(f.letter, f.rank, cache)?;
        for ray in factor_rays {
            let mut triple: [BTreeMap<usize, Rat>; 3] =
                [BTreeMap::new(), BTreeMap::new(), BTreeMap::new()];
            for j in 0..3 {
                for k in 0..f.rank {
                    let c = ray[j * f.rank + k];
                    if c != 0 {
                        triple[j].insert(f.nodes[k], Rat::from(Int::from(c)));
                    }
                }
            }
            out.push(triple);
        }
    }
    Ok(out)
}

/// Deduplicated union over all regular facets of Type I rays and induced
/// Levi-cone rays, kept only when consistent with the cone description.
pub fn all_ray_generators(
    wg: &WeylGroup,
    cd: &ConeDescription,
    table: &ValueTable,
    cache: &mut HashMap<(char, usize), Vec<Vec<i64>>>,
) -> Result<Vec<RayTriple>> {
    all_ray_generators_range(wg, cd, table, cache, None)
}

/// Generator sweep restricted to a half-open facet index range, for
/// resumable sharded runs over large cones.
pub fn all_ray_generators_range(
    wg: &WeylGroup,
    cd: &ConeDescription,
    table: &ValueTable,
    cache: &mut HashMap<(char, usize), Vec<Vec<i64>>>,
    facet_range: Option<(usize, usize)>,
) -> Result<Vec<RayTriple>> {
    let r = wg.rank();
    // facets grouped by parabolic; Levi ray sets resolved up front so the
    // facet sweep is read-only
    let mut parabolics: Vec<Parabolic> = Vec::new();
    let mut levi_rays: Vec<Vec<[BTreeMap<usize, Rat>; 3]>> = Vec::new();
    for i in 0..r {
        let p = maximal_parabolic(wg, i);
        levi_rays.push(levi_cone_rays(&p, cache)?);
        parabolics.push(p);
    }
    let (lo, hi) = facet_range.unwrap_or((0, cd.inequalities.len()));
    let facets: Vec<FacetData> = cd
        .inequalities
        .iter()
        .skip(lo)
        .take(hi.saturating_sub(lo))
        .map(|iq| FacetData {
            p_index: iq.p_index,
            triple: iq.triple,
        })
        .collect();
    let per_facet: Vec<Result<Vec<RayTriple>>> = facets
        .par_iter()
        .map(|fd| {
            let p = &parabolics[fd.p_index];
            let mut rays = type1_rays(table, wg, p, fd)?;
            let t1_snapshot = rays.clone();
            for (ri, mu_pairings) in levi_rays[fd.p_index].iter().enumerate() {
                let mus: [Weight; 3] = [
                    extend_levi_weight(&wg.rs, p, &mu_pairings[0]),
                    extend_levi_weight(&wg.rs, p, &mu_pairings[1]),
                    extend_levi_weight(&wg.rs, p, &mu_pairings[2]),
                ];
                if let Some(coords) = induce(wg, p, fd, &t1_snapshot, &mus) {
                    rays.push(RayTriple {
                        coords,
                        provenance: RayProvenance::TypeII {
                            p_index: fd.p_index,
                            triple: fd.triple,
                            levi_ray: ri,
                        },
                    });
                }
            }
            Ok(rays)
        })
        .collect();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut out = Vec::new();
    for batch in per_facet {
        for ray in batch? {
            // consistency filter against the full description
            if !cd.is_member_real(&ray.coords) {
                continue;
            }
            if seen.insert(ray.coords.clone()) {
                out.push(ray);
            }
        }
    }
    out.sort_by(|a, b| a.coords.cmp(&b.coords));
    Ok(out)
}

/// Convenience: generators then extremal filter, for one group.
pub fn extremal_rays(wg: &WeylGroup) -> Result<Vec<Vec<i64>>> {
    let mut cache = HashMap::new();
    extremal_rays_of_type(wg.rs.type_letter, wg.rs.rank, &mut cache)
}
