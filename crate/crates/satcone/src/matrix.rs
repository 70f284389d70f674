//! Small exact linear algebra helpers: rational inversion, integer rank,
//! Smith normal form, and integer kernels. Sizes here are tiny (rank <= 6,
//! dimension <= 18), so simplicity wins over asymptotics.

use crate::{Int, Rat};
use num_traits::{One, Signed, Zero};

/// Gauss-Jordan inverse of a square rational matrix. Returns `None` if singular.
pub fn rat_inverse(m: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m.to_vec();
    let mut inv: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let t = &a[col][j] * &f;
                    a[r][j] = &a[r][j] - &t;
                    let t = &inv[col][j] * &f;
                    inv[r][j] = &inv[r][j] - &t;
                }
            }
        }
    }
    Some(inv)
}

/// Solve `a x = b` for square rational `a`. `None` if singular.
pub fn rat_solve(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let inv = rat_inverse(a)?;
    Some(mat_vec(&inv, b))
}

pub fn mat_vec(m: &[Vec<Rat>], v: &[Rat]) -> Vec<Rat> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// Rank of an integer matrix via fraction-free Gaussian elimination.
pub fn int_rank(rows: &[Vec<Int>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut a: Vec<Vec<Int>> = rows.to_vec();
    let mut rank = 0;
    let mut prev = Int::one();
    for col in 0..ncols {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..a.len() {
            for j in col + 1..ncols {
                let t = &a[rank][col] * &a[r][j] - &a[r][col] * &a[rank][j];
                a[r][j] = &t / &prev;
            }
            a[r][col] = Int::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
        if rank == a.len() {
            break;
        }
    }
    rank
}

/// Rank of an i64 matrix (converted to big integers first).
pub fn int_rank_i64(rows: &[Vec<i64>]) -> usize {
    let big: Vec<Vec<Int>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| Int::from(x)).collect())
        .collect();
    int_rank(&big)
}

/// Smith normal form of an integer matrix: returns `(d, u, v)` with
/// `u * a * v = diag(d)`, `u` and `v` unimodular. `d` has the invariant
/// factors in divisibility order.
pub fn smith_normal_form(a: &[Vec<i64>]) -> (Vec<i64>, Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let nrows = a.len();
    let ncols = if nrows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<i64>> = a.to_vec();
    let mut u = identity(nrows);
    let mut v = identity(ncols);
    let mut t = 0;
    while t < nrows.min(ncols) {
        // move a nonzero pivot to (t, t)
        let Some((pi, pj)) = pivot_min_abs(&m, t) else {
            break;
        };
        m.swap(t, pi);
        u.swap(t, pi);
        swap_cols(&mut m, t, pj);
        swap_cols(&mut v, t, pj);
        loop {
            let mut clean = true;
            for r in t + 1..nrows {
                if m[r][t] != 0 {
                    let q = div_round(m[r][t], m[t][t]);
                    row_sub(&mut m, r, t, q);
                    row_sub(&mut u, r, t, q);
                    if m[r][t] != 0 {
                        m.swap(t, r);
                        u.swap(t, r);
                        clean = false;
                    }
                }
            }
            for c in t + 1..ncols {
                if m[t][c] != 0 {
                    let q = div_round(m[t][c], m[t][t]);
                    col_sub(&mut m, c, t, q);
                    col_sub(&mut v, c, t, q);
                    if m[t][c] != 0 {
                        swap_cols(&mut m, t, c);
                        swap_cols(&mut v, t, c);
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }
        // enforce divisibility of later entries by m[t][t]
        let mut retry = false;
        'outer: for r in t + 1..nrows {
            for c in t + 1..ncols {
                if m[r][c] % m[t][t] != 0 {
                    // add row r to row t and restart the cleaning at t
                    for j in 0..ncols {
                        m[t][j] += m[r][j];
                    }
                    for j in 0..nrows {
                        u[t][j] += u[r][j];
                    }
                    retry = true;
                    break 'outer;
                }
            }
        }
        if retry {
            continue;
        }
        if m[t][t] < 0 {
            for j in 0..ncols {
                m[t][j] = -m[t][j];
            }
            for j in 0..nrows {
                u[t][j] = -u[t][j];
            }
        }
        t += 1;
    }
    let d = (0..nrows.min(ncols)).map(|i| m[i][i]).collect();
    (d, u, v)
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| (i == j) as i64).collect())
        .collect()
}

fn pivot_min_abs(m: &[Vec<i64>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for r in t..m.len() {
        for c in t..m[r].len() {
            if m[r][c] != 0 {
                match best {
                    Some((br, bc)) if m[br][bc].abs() <= m[r][c].abs() => {}
                    _ => best = Some((r, c)),
                }
            }
        }
    }
    best
}

fn div_round(a: i64, b: i64) -> i64 {
    // quotient minimizing |a - q b|
    let q = a / b;
    let r = a - q * b;
    if 2 * r.abs() > b.abs() {
        q + r.signum() * b.signum()
    } else {
        q
    }
}

fn row_sub(m: &mut [Vec<i64>], r: usize, t: usize, q: i64) {
    let trow = m[t].clone();
    for (x, y) in m[r].iter_mut().zip(trow) {
        *x -= q * y;
    }
}

fn col_sub(m: &mut [Vec<i64>], c: usize, t: usize, q: i64) {
    for row in m.iter_mut() {
        row[c] -= q * row[t];
    }
}

fn swap_cols(m: &mut [Vec<i64>], a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

/// Basis (as rows) of the integer kernel `{x : a x = 0}`.
pub fn int_kernel(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let ncols = if a.is_empty() { 0 } else { a[0].len() };
    let (d, _u, v) = smith_normal_form(a);
    let mut basis = Vec::new();
    for j in 0..ncols {
        let zero_diag = j >= d.len() || d[j] == 0;
        if zero_diag {
            basis.push(v.iter().map(|row| row[j]).collect());
        }
    }
    basis
}

/// Divide an integer vector by the gcd of its entries (result has gcd 1,
/// leading sign preserved). Zero vectors are returned unchanged.
pub fn primitive_int(v: &[Int]) -> Vec<Int> {
    let mut g = Int::zero();
    for x in v {
        g = num_integer::gcd(g, x.abs());
    }
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

pub fn primitive_i64(v: &[i64]) -> Vec<i64> {
    let mut g: i64 = 0;
    for &x in v {
        g = num_integer::gcd(g, x.abs());
    }
    if g <= 1 {
        return v.to_vec();
    }
    v.iter().map(|x| x / g).collect()
}

/// Clear denominators of a rational vector and reduce to a primitive integer
/// vector pointing the same way.
pub fn primitive_from_rat(v: &[Rat]) -> Vec<Int> {
    let mut lcm = Int::one();
    for x in v {
        lcm = num_integer::lcm(lcm, x.denom().clone());
    }
    let ints: Vec<Int> = v.iter().map(|x| x.numer() * &lcm / x.denom()).collect();
    primitive_int(&ints)
}
