//! Builders for the explicit matrices behind the nullity certificates:
//! the cyclic shift, the orthogonal-row Hankel family, the block
//! witnesses for 4-rings and 6-rings of complete graphs, the hand-checked
//! nine-vertex witness, and bipartite biadjacency forms.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::{rat, ratio, FieldScalar, Matrix, Quad, Rational};
use crate::circulant::CirculantSpec;
use crate::error::Error;
use crate::graph::Graph;

/// Permutation matrix of the full cycle on `n` points: entry (i, j) is 1
/// iff `i = j + 1 (mod n)`, so powers of it shift row indices.
pub fn shift_matrix(n: usize) -> Matrix<Rational> {
    assert!(n >= 1);
    Matrix::from_fn(n, n, |i, j| if i == (j + 1) % n { rat(1) } else { rat(0) })
}

/// Circulant Hankel matrix with orthogonal rows, together with the
/// squared row norm `lambda`: first row `(1, 2, 4, ..., 2^(n-2), w)` with
/// `w = -(2/3)(2^(n-2) - 1)`, every later row the previous one cycled
/// left. Satisfies `H^2 = lambda I` exactly.
pub fn hankel(n: usize) -> Result<(Matrix<Rational>, Rational), Error> {
    if n < 3 {
        return Err(Error::Unsupported(format!(
            "hankel family starts at 3x3, got {n}"
        )));
    }
    let two = BigInt::from(2);
    let mut first: Vec<Rational> = (0..n - 1)
        .map(|i| Rational::from_integer(two.pow(i as u32)))
        .collect();
    let w = ratio(-2, 3) * Rational::from_integer(two.pow((n - 2) as u32) - BigInt::one());
    first.push(w.clone());
    let lambda = &w * &w
        + (0..n - 1)
            .map(|i| Rational::from_integer(BigInt::from(4).pow(i as u32)))
            .sum::<Rational>();
    let h = Matrix::from_fn(n, n, |i, j| first[(i + j) % n].clone());
    Ok((h, lambda))
}

/// The normalized Hankel matrix `A = H / sqrt(lambda)` as a quadratic
/// matrix in the context `d = lambda`: entries are `(h/lambda) sqrt(lambda)`.
/// `A A^T = I` exactly, and both `A` and `A - PA` are entrywise nonzero.
pub fn orthogonal_hankel(n: usize) -> Result<Matrix<Quad>, Error> {
    let (h, lambda) = hankel(n)?;
    let scaled = h.map(|x| x / &lambda);
    Ok(Matrix::lift_sqrt(&scaled, &lambda))
}

/// Block witness for the 4-ring of K_n copies: a symmetric 4n x 4n matrix
/// whose off-diagonal support is that graph and whose nullity is 2n.
pub fn witness_k4(n: usize) -> Result<Matrix<Quad>, Error> {
    let (parts, _) = k4_parts(n)?;
    Ok(parts)
}

/// Left eliminator for [`witness_k4`]: unit block-triangular, and the
/// product with the witness has its first and last block rows zero.
pub fn k4_eliminator(n: usize) -> Result<Matrix<Quad>, Error> {
    let (_, e) = k4_parts(n)?;
    Ok(e)
}

fn k4_parts(n: usize) -> Result<(Matrix<Quad>, Matrix<Quad>), Error> {
    let (h, lambda) = hankel(n)?;
    let a = Matrix::lift_sqrt(&h.map(|x| x / &lambda), &lambda);
    let d = lambda;
    let p = Matrix::lift(&shift_matrix(n), &d);
    let pt = p.transpose();
    let i = Matrix::quad_identity(n, &d);
    let o = Matrix::lift(&Matrix::zero(n, n), &d);
    let pa = p.mul(&a)?;
    let b = a.sub(&pa)?;
    let pb = p.mul(&b)?;
    let neg = |m: &Matrix<Quad>| m.map(|q| q.zero_like().sub(q));
    let k = Matrix::assemble(&[
        vec![&a, &i, &o, &pt],
        vec![&i, &b, &i, &o],
        vec![&o, &i, &neg(&pa), &i],
        vec![&p, &o, &i, &neg(&pb)],
    ])?;
    let e = Matrix::assemble(&[
        vec![&i, &neg(&a), &neg(&pt), &o],
        vec![&o, &i, &o, &o],
        vec![&o, &o, &i, &o],
        vec![&o, &neg(&p), &pb, &i],
    ])?;
    Ok((k, e))
}

/// Block witness for the 6-ring of K_n copies, nullity 2n.
pub fn witness_k6(n: usize) -> Result<Matrix<Quad>, Error> {
    let (k, _) = k6_parts(n)?;
    Ok(k)
}

/// Left eliminator for [`witness_k6`].
pub fn k6_eliminator(n: usize) -> Result<Matrix<Quad>, Error> {
    let (_, e) = k6_parts(n)?;
    Ok(e)
}

fn k6_parts(n: usize) -> Result<(Matrix<Quad>, Matrix<Quad>), Error> {
    let (h, lambda) = hankel(n)?;
    let a = Matrix::lift_sqrt(&h.map(|x| x / &lambda), &lambda);
    let d = lambda;
    let p = Matrix::lift(&shift_matrix(n), &d);
    let pt = p.transpose();
    let i = Matrix::quad_identity(n, &d);
    let o = Matrix::lift(&Matrix::zero(n, n), &d);
    let pa = p.mul(&a)?;
    let neg = |m: &Matrix<Quad>| m.map(|q| q.zero_like().sub(q));
    let k = Matrix::assemble(&[
        vec![&a, &i, &o, &o, &o, &pt],
        vec![&i, &a, &i, &o, &o, &o],
        vec![&o, &i, &a, &i, &o, &o],
        vec![&o, &o, &i, &pa, &i, &o],
        vec![&o, &o, &o, &i, &pa, &i],
        vec![&p, &o, &o, &o, &i, &pa],
    ])?;
    let e = Matrix::assemble(&[
        vec![&i, &neg(&a), &o, &a, &neg(&pt), &o],
        vec![&o, &i, &o, &o, &o, &o],
        vec![&o, &o, &i, &o, &o, &o],
        vec![&o, &o, &o, &i, &o, &o],
        vec![&o, &o, &o, &o, &i, &o],
        vec![&o, &neg(&p), &pa, &o, &neg(&pa), &i],
    ])?;
    Ok((k, e))
}

/// The hand-checked 9x9 rational witness whose off-diagonal support is
/// the nine-vertex circulant with jumps 1 and 3, with rank exactly 4.
pub fn witness_c913() -> Matrix<Rational> {
    let r = ratio;
    Matrix::from_rows(vec![
        vec![r(-1, 8), r(3, 4), r(-1, 2), r(1, 1), r(0, 1), r(0, 1), r(0, 1), r(1, 1), r(0, 1)],
        vec![r(3, 4), r(-2, 1), r(1, 2), r(0, 1), r(1, 1), r(0, 1), r(0, 1), r(0, 1), r(1, 1)],
        vec![r(-1, 2), r(1, 2), r(-3, 4), r(0, 1), r(0, 1), r(1, 1), r(1, 1), r(0, 1), r(0, 1)],
        vec![r(1, 1), r(0, 1), r(0, 1), r(48, 5), r(-12, 5), r(-24, 5), r(-16, 5), r(0, 1), r(0, 1)],
        vec![r(0, 1), r(1, 1), r(0, 1), r(-12, 5), r(6, 5), r(4, 5), r(0, 1), r(12, 5), r(0, 1)],
        vec![r(0, 1), r(0, 1), r(1, 1), r(-24, 5), r(4, 5), r(4, 5), r(0, 1), r(0, 1), r(-2, 5)],
        vec![r(0, 1), r(0, 1), r(1, 1), r(-16, 5), r(0, 1), r(0, 1), r(-2, 5), r(-4, 5), r(-3, 5)],
        vec![r(1, 1), r(0, 1), r(0, 1), r(0, 1), r(12, 5), r(0, 1), r(-4, 5), r(24, 5), r(6, 5)],
        vec![r(0, 1), r(1, 1), r(0, 1), r(0, 1), r(0, 1), r(-2, 5), r(-3, 5), r(6, 5), r(-3, 10)],
    ])
    .expect("rectangular by construction")
}

/// The vertex relabeling under which [`witness_c913`]'s support equals
/// the circulant on 9 vertices with jumps {1, 3}: matrix index
/// `j = 3 b + r` names circulant vertex `(b - 3 r) mod 9`.
pub fn c913_vertex_map() -> [usize; 9] {
    let mut map = [0usize; 9];
    for (j, slot) in map.iter_mut().enumerate() {
        let (b, r) = (j / 3, j % 3);
        *slot = (b + 9 - (3 * r) % 9) % 9;
    }
    map
}

/// Relabeling from block-matrix indices `(copy b, row r) = b n + r` to
/// the twisted-ring product indexing: the block convention wires the
/// wrap-around one row up, the product one row down, so rows negate.
pub fn torus_pattern_map(n: usize, m: usize) -> Vec<usize> {
    (0..m)
        .flat_map(|b| (0..n).map(move |r| b * n + (n - r) % n))
        .collect()
}

/// Off-diagonal support of a square matrix as a graph. Fails when the
/// support is not symmetric.
pub fn pattern_graph<T: FieldScalar>(m: &Matrix<T>) -> Result<Graph, Error> {
    if m.rows() != m.cols() {
        return Err(Error::Dimension("pattern of a non-square matrix".into()));
    }
    let n = m.rows();
    let mut g = Graph::empty(n);
    for i in 0..n {
        for j in i + 1..n {
            let up = !m.get(i, j).is_zero();
            if up != !m.get(j, i).is_zero() {
                return Err(Error::Inconsistent(format!(
                    "asymmetric support at ({i}, {j})"
                )));
            }
            if up {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// Exponent set of the biadjacency form of a connected bipartite
/// circulant of order 2n: jump `s` contributes `(s-1)/2` and
/// `n - (s+1)/2`, which coincide exactly when `s = n`.
pub fn biadjacency_exponents(spec: &CirculantSpec) -> Result<BTreeSet<usize>, Error> {
    if !spec.is_connected() {
        return Err(Error::Unsupported(format!(
            "{spec} is disconnected; take the reduced spec first"
        )));
    }
    if !spec.is_bipartite() {
        return Err(Error::Unsupported(format!("{spec} is not bipartite")));
    }
    let half = spec.n() / 2;
    let mut exponents = BTreeSet::new();
    for &s in spec.s() {
        exponents.insert((s - 1) / 2);
        exponents.insert(half - s.div_ceil(2));
    }
    Ok(exponents)
}

/// Biadjacency matrix of a connected bipartite circulant of order 2n, as
/// the sum of shift powers over [`biadjacency_exponents`]. Rows index the
/// odd part, columns the even part: entry (i, j) is 1 iff vertex `2i+1`
/// is adjacent to vertex `2j`.
pub fn biadjacency(spec: &CirculantSpec) -> Result<Matrix<Rational>, Error> {
    let exponents = biadjacency_exponents(spec)?;
    let half = spec.n() / 2;
    Ok(Matrix::from_fn(half, half, |i, j| {
        if exponents.contains(&((i + half - j) % half)) {
            rat(1)
        } else {
            rat(0)
        }
    }))
}

/// Search for a unit `a` and shift `b` turning the exponent set into the
/// initial run `{0, 1, ..., t}` modulo `modulus`. Success certifies that
/// the bipartite graph behind the exponents has `M = Z = 2t`.
pub fn sequential_normalize(
    exponents: &BTreeSet<usize>,
    modulus: usize,
) -> Option<(usize, usize, usize)> {
    if exponents.is_empty() || exponents.iter().any(|&e| e >= modulus) {
        return None;
    }
    let t = exponents.len() - 1;
    for a in 1..modulus.max(2) {
        if a.gcd(&modulus) != 1 {
            continue;
        }
        for b in 0..modulus {
            if exponents
                .iter()
                .map(|&e| (a * e + b) % modulus)
                .collect::<BTreeSet<_>>()
                == (0..=t).collect::<BTreeSet<_>>()
            {
                return Some((a, b, t));
            }
        }
    }
    None
}
