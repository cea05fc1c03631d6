#![allow(dead_code)]

use std::collections::BTreeMap;

use hoalg::{Convention, GradedSpace, Operation, OperationFamily, Scalar, TensorWord, Vector};

/// Koszul sign by counting inverted pairs: `p[a] > p[b]` for `a < b`
/// contributes `|x_{p[a]}| |x_{p[b]}|`.
pub fn eps(p: &[usize], degrees: &[i64]) -> i64 {
    let mut e = 0;
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            if p[a] > p[b] {
                e += degrees[p[a]] * degrees[p[b]];
            }
        }
    }
    if e % 2 == 0 { 1 } else { -1 }
}

pub fn sgn(p: &[usize]) -> i64 {
    eps(p, &vec![1; p.len()])
}

pub fn all_perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_perms(n - 1) {
        for k in 0..=p.len() {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

/// Permutations increasing on each consecutive block, found by filtering
/// all of `𝕊_m`.
pub fn unshuffles(blocks: &[usize]) -> Vec<Vec<usize>> {
    let m: usize = blocks.iter().sum();
    let mut starts = Vec::new();
    let mut at = 0;
    for &b in blocks {
        starts.push((at, at + b));
        at += b;
    }
    let mut out: Vec<Vec<usize>> = all_perms(m)
        .into_iter()
        .filter(|p| starts.iter().all(|&(s, e)| (s + 1..e).all(|k| p[k - 1] < p[k])))
        .collect();
    out.sort();
    out
}

pub fn pow(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 { 1 } else { -1 }
}

/// The pre-Lie residual written out as the two shuffle sums
///
/// ```text
/// Σ_{i+j=n+1} [ Σ_{Sh(j−1,1,i−2)} s₁ μ_i(μ_j(y₁…y_j), y_{j+1}…y_{n−1}, x_n)
///             − Σ_{Sh(i−1,j−1)} s₂ μ_i(y₁…y_{i−1}, μ_j(y_i…y_{n−1}, x_n)) ]
/// ```
///
/// with `s₁ = ε` (hat) or `sgn·ε·(−1)^{j(i−1)}` (unhat), and
/// `s₂ = ε·(−1)^{1+S}` (hat) or `sgn·ε·(−1)^{i+jS}` (unhat), `S` the
/// degree of `y₁…y_{i−1}`.
pub fn prelie_expansion(family: &OperationFamily, n: usize) -> Operation {
    let space = family.space().clone();
    let unhat = family.convention() == Convention::Unhat;
    let degree = if unhat { n as i64 - 3 } else { -2 };
    let mut entries = BTreeMap::new();
    for w in space.words(n) {
        let dg: Vec<i64> = w.iter().map(|&x| space.degree(x)).collect();
        let mut out = Vector::zero();
        for i in 1..=n {
            let j = n + 1 - i;
            let (Some(fi), Some(fj)) = (family.get(i), family.get(j)) else { continue };
            let extend = |p: Vec<usize>| {
                let mut pp = p;
                pp.push(n - 1);
                pp
            };
            if i >= 2 {
                for pp in unshuffles(&[j - 1, 1, i - 2]).into_iter().map(extend) {
                    let e = eps(&pp, &dg);
                    let s = if unhat { e * sgn(&pp) * pow((j * (i - 1)) as i64) } else { e };
                    let y: Vec<usize> = pp.iter().map(|&q| w[q]).collect();
                    for (&z, c) in &fj.evaluate(&y[..j]).unwrap() {
                        let mut inner = vec![z];
                        inner.extend_from_slice(&y[j..]);
                        for (&z2, c2) in &fi.evaluate(&inner).unwrap() {
                            out.add_term(z2, Scalar::from(s) * c * c2);
                        }
                    }
                }
            }
            for pp in unshuffles(&[i - 1, j - 1]).into_iter().map(extend) {
                let e = eps(&pp, &dg);
                let y: Vec<usize> = pp.iter().map(|&q| w[q]).collect();
                let big_s: i64 = y[..i - 1].iter().map(|&x| space.degree(x)).sum();
                let s = if unhat { e * sgn(&pp) * pow(i as i64 + j as i64 * big_s) } else { e * pow(1 + big_s) };
                for (&z, c) in &fj.evaluate(&y[i - 1..]).unwrap() {
                    let mut outer = y[..i - 1].to_vec();
                    outer.push(z);
                    for (&z2, c2) in &fi.evaluate(&outer).unwrap() {
                        out.add_term(z2, Scalar::from(-s) * c * c2);
                    }
                }
            }
        }
        if !out.is_zero() {
            entries.insert(w, out);
        }
    }
    Operation::from_entries(space, n, degree, entries).unwrap()
}

/// Structure constants of a binary operation as a dense table.
pub fn table(mu: &Operation) -> Vec<Vec<Vec<Scalar>>> {
    let d = mu.space().dim();
    (0..d)
        .map(|a| {
            (0..d)
                .map(|b| {
                    let v = mu.evaluate(&[a, b]).unwrap();
                    (0..d).map(|z| v.coefficient(&z)).collect()
                })
                .collect()
        })
        .collect()
}

fn product(t: &[Vec<Vec<Scalar>>], u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    let d = t.len();
    let mut out = vec![Scalar::zero(); d];
    for a in 0..d {
        for b in 0..d {
            if u[a].is_zero() || v[b].is_zero() {
                continue;
            }
            for z in 0..d {
                out[z] = &out[z] + &(&(&u[a] * &v[b]) * &t[a][b][z]);
            }
        }
    }
    out
}

fn unit(d: usize, i: usize) -> Vec<Scalar> {
    (0..d).map(|k| if k == i { Scalar::one() } else { Scalar::zero() }).collect()
}

/// `(xy)z − x(yz)` on basis elements, from the dense table.
pub fn associator(mu: &Operation, x: usize, y: usize, z: usize) -> Vec<Scalar> {
    let t = table(mu);
    let d = t.len();
    let l = product(&t, &product(&t, &unit(d, x), &unit(d, y)), &unit(d, z));
    let r = product(&t, &unit(d, x), &product(&t, &unit(d, y), &unit(d, z)));
    l.iter().zip(&r).map(|(a, b)| a - b).collect()
}

pub fn dense(v: &Vector, d: usize) -> Vec<Scalar> {
    (0..d).map(|z| v.coefficient(&z)).collect()
}

/// 2×2 integer matrices.
pub type Mat = [[i64; 2]; 2];

pub fn matmul(a: &Mat, b: &Mat) -> Mat {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = (0..2).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    c
}

/// The structure constants of a matrix subalgebra given by a basis, where
/// every product is expressed through the unique nonzero entry pattern.
pub fn matrix_algebra(labels: [&str; 2], basis: [Mat; 2]) -> Operation {
    let space = std::sync::Arc::new(GradedSpace::ungraded(labels).unwrap());
    let coords = |m: &Mat| -> Vector {
        // Solve m = c₀ B₀ + c₁ B₁ over the entries; the bases used have
        // disjoint supports.
        let mut v = Vector::zero();
        for (k, b) in basis.iter().enumerate() {
            let (i, j) = (0..4).map(|t| (t / 2, t % 2)).find(|&(i, j)| b[i][j] != 0).unwrap();
            v.add_term(k, Scalar::from(m[i][j] / b[i][j]));
        }
        v
    };
    let mut entries = BTreeMap::new();
    for a in 0..2 {
        for b in 0..2 {
            let v = coords(&matmul(&basis[a], &basis[b]));
            if !v.is_zero() {
                entries.insert(TensorWord::from(vec![a, b]), v);
            }
        }
    }
    Operation::from_entries(space, 2, 0, entries).unwrap()
}
