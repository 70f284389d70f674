//! Exact root-system data for the simple types A_n, C_n, D_n: Cartan
//! matrices in Bourbaki numbering, positive roots, fundamental (co)weights,
//! and the root-lattice congruences used by the cone description.

use crate::matrix::{int_kernel, rat_inverse, smith_normal_form};
use crate::{Error, Int, Rat, Result};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TypeLetter {
    A,
    C,
    D,
}

impl TypeLetter {
    pub fn from_char(c: char) -> Option<Self> {
        match c.to_ascii_uppercase() {
            'A' => Some(TypeLetter::A),
            'C' => Some(TypeLetter::C),
            'D' => Some(TypeLetter::D),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            TypeLetter::A => 'A',
            TypeLetter::C => 'C',
            TypeLetter::D => 'D',
        }
    }
}

/// A weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub coords: Vec<Rat>,
}

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight {
            coords: vec![Rat::zero(); rank],
        }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight {
            coords: coords.iter().map(|&c| Rat::from(Int::from(c))).collect(),
        }
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Weight::zero(rank);
        w.coords[i] = Rat::one();
        w
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|c| !c.is_negative())
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    pub fn int_coords(&self) -> Option<Vec<Int>> {
        self.coords
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Weight {
        let k = Rat::from(Int::from(k));
        Weight {
            coords: self.coords.iter().map(|c| c * &k).collect(),
        }
    }
}

/// A coweight in simple-coroot coordinates (the basis dual to the
/// fundamental weights).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coweight {
    pub coords: Vec<Rat>,
}

/// A congruence `coeffs . v == 0 (mod modulus)` on concatenated
/// fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Congruence {
    pub coeffs: Vec<i64>,
    pub modulus: i64,
}

impl Congruence {
    pub fn holds(&self, v: &[i64]) -> bool {
        let s: i64 = self.coeffs.iter().zip(v).map(|(a, b)| a * b).sum();
        s.rem_euclid(self.modulus) == 0
    }
}

/// Cartan data for one simple type. `cartan[i][j] = alpha_j(alpha_i^vee)`.
#[derive(Debug, Clone)]
pub struct RootSystem {
    pub type_letter: TypeLetter,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub inverse_cartan: Vec<Vec<Rat>>,
    /// Positive roots in simple-root coordinates.
    pub positive_roots: Vec<Vec<i64>>,
    pub rho: Weight,
}

pub fn build_root_system(type_letter: TypeLetter, rank: usize) -> Result<RootSystem> {
    let ok = match type_letter {
        TypeLetter::A => rank >= 1,
        TypeLetter::C => rank >= 2,
        TypeLetter::D => rank >= 4,
    };
    if !ok || rank > 8 {
        return Err(Error::UnsupportedType(type_letter.as_char(), rank));
    }
    let cartan = cartan_matrix(type_letter, rank);
    let rat_cartan: Vec<Vec<Rat>> = cartan
        .iter()
        .map(|row| row.iter().map(|&x| Rat::from(Int::from(x))).collect())
        .collect();
    let inverse_cartan = rat_inverse(&rat_cartan).expect("Cartan matrix is invertible");
    let positive_roots = generate_positive_roots(&cartan);
    let expected = match type_letter {
        TypeLetter::A => rank * (rank + 1) / 2,
        TypeLetter::C => rank * rank,
        TypeLetter::D => rank * (rank - 1),
    };
    assert_eq!(
        positive_roots.len(),
        expected,
        "positive root count mismatch for {}{}",
        type_letter.as_char(),
        rank
    );
    Ok(RootSystem {
        type_letter,
        rank,
        cartan,
        inverse_cartan,
        positive_roots,
        rho: Weight::from_ints(&vec![1; rank]),
    })
}

fn cartan_matrix(t: TypeLetter, r: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0i64; r]; r];
    for i in 0..r {
        c[i][i] = 2;
    }
    let chain = |c: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match t {
        TypeLetter::A => {
            for i in 0..r - 1 {
                chain(&mut c, i, i + 1);
            }
        }
        TypeLetter::C => {
            for i in 0..r - 1 {
                chain(&mut c, i, i + 1);
            }
            // alpha_r is the long root: alpha_r(alpha_{r-1}^vee) = -2
            c[r - 2][r - 1] = -2;
            c[r - 1][r - 2] = -1;
        }
        TypeLetter::D => {
            for i in 0..r - 2 {
                chain(&mut c, i, i + 1);
            }
            chain(&mut c, r - 3, r - 1);
        }
    }
    c
}

/// Closure of the simple roots under simple reflections, intersected with
/// the positive cone.
fn generate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let r = cartan.len();
    let mut seen: std::collections::BTreeSet<Vec<i64>> = std::collections::BTreeSet::new();
    let mut queue: Vec<Vec<i64>> = Vec::new();
    for i in 0..r {
        let mut root = vec![0i64; r];
        root[i] = 1;
        seen.insert(root.clone());
        queue.push(root);
    }
    while let Some(b) = queue.pop() {
        for i in 0..r {
            // s_i(beta) = beta - beta(alpha_i^vee) alpha_i
            let pairing: i64 = (0..r).map(|j| cartan[i][j] * b[j]).sum();
            let mut nb = b.clone();
            nb[i] -= pairing;
            if nb.iter().all(|&x| x >= 0) && seen.insert(nb.clone()) {
                queue.push(nb);
            }
        }
    }
    seen.into_iter().collect()
}

impl RootSystem {
    /// `pair(weight, coweight)` in the dual coordinate systems.
    pub fn pair(&self, w: &Weight, y: &Coweight) -> Result<Rat> {
        if w.coords.len() != y.coords.len() {
            return Err(Error::RankMismatch(w.coords.len(), y.coords.len()));
        }
        Ok(w.coords.iter().zip(&y.coords).map(|(a, b)| a * b).sum())
    }

    /// Fundamental coweight `x_i` (0-based `i`), dual to the simple roots.
    pub fn fundamental_coweight(&self, i: usize) -> Coweight {
        // coords d satisfy cartan^T d = e_i, i.e. d = row i of inverse_cartan
        Coweight {
            coords: self.inverse_cartan[i].clone(),
        }
    }

    /// Simple coroot `alpha_i^vee` in coroot coordinates.
    pub fn simple_coroot(&self, i: usize) -> Coweight {
        let mut coords = vec![Rat::zero(); self.rank];
        coords[i] = Rat::one();
        Coweight { coords }
    }

    /// Root expressed in fundamental-weight coordinates.
    pub fn root_to_weight(&self, root: &[i64]) -> Weight {
        let coords = (0..self.rank)
            .map(|i| {
                let v: i64 = (0..self.rank).map(|j| self.cartan[i][j] * root[j]).sum();
                Rat::from(Int::from(v))
            })
            .collect();
        Weight { coords }
    }

    /// Simple root `alpha_i` as a weight.
    pub fn simple_root_weight(&self, i: usize) -> Weight {
        let mut root = vec![0i64; self.rank];
        root[i] = 1;
        self.root_to_weight(&root)
    }

    /// Height of a positive root: the sum of its simple-root coordinates.
    pub fn height(root: &[i64]) -> i64 {
        root.iter().sum()
    }

    /// Root coordinates of a weight; entries rational in general.
    pub fn weight_to_root_coords(&self, w: &Weight) -> Vec<Rat> {
        // root coords b solve c = C b with C[i][j] = cartan[i][j]
        crate::matrix::mat_vec(&self.inverse_cartan_t_cols(), &w.coords)
    }

    fn inverse_cartan_t_cols(&self) -> Vec<Vec<Rat>> {
        // (C^{-1}) as a matrix applied to omega-coords: b = C^{-1} c where the
        // linear system is c_i = sum_j cartan[i][j] b_j.
        self.inverse_cartan_rows().to_vec()
    }

    fn inverse_cartan_rows(&self) -> &Vec<Vec<Rat>> {
        &self.inverse_cartan
    }

    /// True iff the weight lies in the root lattice.
    pub fn in_root_lattice(&self, w: &Weight) -> bool {
        self.weight_to_root_coords(w).iter().all(|c| c.is_integer())
    }

    /// Congruences on `copies` concatenated omega-coordinate blocks cutting
    /// out "the sum of the weights lies in the root lattice". Derived from
    /// the Smith normal form of the Cartan matrix.
    pub fn root_lattice_congruences(&self, copies: usize) -> Vec<Congruence> {
        assert!(copies >= 1);
        let (d, u, _v) = smith_normal_form(&self.cartan);
        let mut out = Vec::new();
        for (idx, &m) in d.iter().enumerate() {
            if m > 1 {
                let row: Vec<i64> = u[idx].iter().map(|&x| x.rem_euclid(m)).collect();
                let coeffs: Vec<i64> = std::iter::repeat(row).take(copies).flatten().collect();
                out.push(Congruence { coeffs, modulus: m });
            }
        }
        out
    }

    /// Integer basis (rows) for the sublattice of `Z^n` satisfying all the
    /// given congruences, `n = congruence length`.
    pub fn congruence_lattice_basis(congruences: &[Congruence], n: usize) -> Vec<Vec<i64>> {
        if congruences.is_empty() {
            return (0..n)
                .map(|i| (0..n).map(|j| (i == j) as i64).collect())
                .collect();
        }
        // solutions v of G v = M k: kernel of [G | -M] projected to v
        let p = congruences.len();
        let mut rows = Vec::with_capacity(p);
        for (i, c) in congruences.iter().enumerate() {
            assert_eq!(c.coeffs.len(), n);
            let mut row = c.coeffs.clone();
            row.extend((0..p).map(|j| if j == i { -c.modulus } else { 0 }));
            rows.push(row);
        }
        let kernel = int_kernel(&rows);
        let projected: Vec<Vec<i64>> = kernel.iter().map(|k| k[..n].to_vec()).collect();
        // Hermite-reduce to an n x n basis
        hermite_basis(&projected, n)
    }
}

/// Row-style Hermite reduction: returns `n` independent rows generating the
/// same lattice as the input rows (which must have full rank `n`).
fn hermite_basis(rows: &[Vec<i64>], n: usize) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<i64>> = rows.to_vec();
    let mut basis: Vec<Vec<i64>> = Vec::new();
    for col in 0..n {
        loop {
            let nz: Vec<usize> = (0..m.len()).filter(|&r| m[r][col] != 0).collect();
            if nz.is_empty() {
                break;
            }
            if nz.len() == 1 {
                let row = m.remove(nz[0]);
                basis.push(row);
                break;
            }
            // reduce all entries in this column by the minimal one
            let min = *nz
                .iter()
                .min_by_key(|&&r| m[r][col].abs())
                .expect("nonempty");
            for &r in &nz {
                if r != min {
                    let q = m[r][col] / m[min][col];
                    for j in 0..n {
                        m[r][j] -= q * m[min][j];
                    }
                }
            }
        }
    }
    assert_eq!(basis.len(), n, "congruence lattice not full rank");
    basis
}
