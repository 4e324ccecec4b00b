//! Concrete classical groups over `GF(q)`.
//!
//! Linear and symplectic groups are generated by transvections, odd-dimensional
//! orthogonal groups by products of reflections with square spinor norm, unitary
//! groups by unitary transvections. Projective versions act on the relevant set
//! of projective points (all points, isotropic points, singular points).

use std::sync::Arc;

use crate::config::Config;
use crate::element::GroupElement;
use crate::error::GroupError;
use crate::field::Field;
use crate::group::{Domain, FiniteGroup};
use crate::matrix::{Matrix, PointSet, VectorSpace};
use crate::perm::Perm;

fn field(q: u32) -> Result<Arc<Field>, GroupError> {
    Ok(Arc::new(Field::new(q)?))
}

/// Additive basis `1, w, .., w^(f-1)` of `GF(q)` over its prime field.
fn additive_basis(f: &Field) -> Vec<u32> {
    let w = f.primitive_element();
    (0..f.degree()).map(|k| f.pow(w, k as u64)).collect()
}

fn transvections(dim: usize, f: &Field) -> Vec<Matrix> {
    let mut out = Vec::new();
    for a in additive_basis(f) {
        for i in 0..dim {
            for j in 0..dim {
                if i != j {
                    out.push(Matrix::elementary(dim, i, j, a));
                }
            }
        }
    }
    out
}

pub fn matrix_group(
    dim: usize,
    q: u32,
    mats: Vec<Matrix>,
    cfg: &Config,
) -> Result<FiniteGroup, GroupError> {
    let f = field(q)?;
    let domain = Domain::Matrix(VectorSpace::new(dim, f.clone()));
    let gens = mats
        .into_iter()
        .filter(|m| !m.is_identity())
        .map(|m| GroupElement::matrix(m, f.clone()))
        .collect();
    FiniteGroup::build_with(domain, gens, cfg)
}

/// Builds a matrix group from many candidate generators, keeping only those that enlarge it.
fn greedy_matrix_group(
    dim: usize,
    q: u32,
    mats: Vec<Matrix>,
    cfg: &Config,
) -> Result<FiniteGroup, GroupError> {
    let f = field(q)?;
    let space = VectorSpace::new(dim, f.clone());
    let degree = space.nonzero_count();
    if degree > cfg.degree_cap as u64 {
        return Err(GroupError::cap(
            "permutation degree",
            degree,
            cfg.degree_cap as u64,
        ));
    }
    let mut chain = crate::chain::StabChain::trivial(degree as usize);
    let mut kept = Vec::new();
    for m in mats {
        if chain.add_generator(&space.matrix_to_perm(&m)) {
            kept.push(m);
        }
    }
    matrix_group(dim, q, kept, cfg)
}

fn greedy_perm_group(degree: usize, perms: Vec<Perm>) -> FiniteGroup {
    let mut chain = crate::chain::StabChain::trivial(degree);
    let mut kept = Vec::new();
    for p in perms {
        if chain.add_generator(&p) {
            kept.push(p);
        }
    }
    FiniteGroup::from_perms(degree, kept)
}

pub fn general_linear(dim: usize, q: u32, cfg: &Config) -> Result<FiniteGroup, GroupError> {
    let f = field(q)?;
    let mut diag = vec![1u32; dim];
    diag[0] = f.primitive_element();
    let mut mats = vec![Matrix::diagonal(&diag)];
    mats.extend(transvections(dim, &f));
    matrix_group(dim, q, mats, cfg)
}

pub fn special_linear(dim: usize, q: u32, cfg: &Config) -> Result<FiniteGroup, GroupError> {
    let f = field(q)?;
    matrix_group(dim, q, transvections(dim, &f), cfg)
}

/// Diagonal matrices in `GL_dim(q)`.
pub fn diagonal_torus(dim: usize, q: u32, cfg: &Config) -> Result<FiniteGroup, GroupError> {
    let f = field(q)?;
    let w = f.primitive_element();
    let mats = (0..dim)
        .map(|i| {
            let mut d = vec![1u32; dim];
            d[i] = w;
            Matrix::diagonal(&d)
        })
        .collect();
    matrix_group(dim, q, mats, cfg)
}

/// The action of a matrix group on a set of projective points.
pub fn projective_action(
    g: &FiniteGroup,
    keep: impl Fn(&[u32]) -> bool,
) -> Result<FiniteGroup, GroupError> {
    let Domain::Matrix(space) = g.domain() else {
        return Err(GroupError::DomainMismatch(
            "projective action needs a matrix group".into(),
        ));
    };
    let points = PointSet::projective(space.clone(), keep);
    let perms = g
        .generators()
        .iter()
        .map(|e| match e {
            GroupElement::Matrix(m) => points
                .matrix_to_perm(&m.matrix)
                .ok_or_else(|| GroupError::Precondition("point set is not invariant".into())),
            GroupElement::Perm(_) => unreachable!(),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FiniteGroup::from_perms(points.len(), perms))
}

pub fn projective_general_linear(
    dim: usize,
    q: u32,
    cfg: &Config,
) -> Result<FiniteGroup, GroupError> {
    projective_action(&general_linear(dim, q, cfg)?, |_| true)
}

pub fn projective_special_linear(
    dim: usize,
    q: u32,
    cfg: &Config,
) -> Result<FiniteGroup, GroupError> {
    projective_action(&special_linear(dim, q, cfg)?, |_| true)
}

/// Alternating form `sum x_i y_(n+i) - x_(n+i) y_i` on `GF(q)^(2n)`.
fn symplectic_form(f: &Field, x: &[u32], y: &[u32]) -> u32 {
    let n = x.len() / 2;
    let mut s = 0;
    for i in 0..n {
        s = f.add(s, f.mul(x[i], y[n + i]));
        s = f.sub(s, f.mul(x[n + i], y[i]));
    }
    s
}

/// The matrix of `x -> x + a B(x, v) v`.
fn form_transvection(f: &Field, v: &[u32], a: u32, form: impl Fn(&[u32], &[u32]) -> u32) -> Matrix {
    let d = v.len();
    let mut entries = Vec::with_capacity(d * d);
    for i in 0..d {
        let mut e = vec![0u32; d];
        e[i] = 1;
        let c = f.mul(a, form(&e, v));
        for (j, &vj) in v.iter().enumerate() {
            entries.push(f.add(e[j], f.mul(c, vj)));
        }
    }
    Matrix::from_entries_unchecked(d, entries)
}

fn all_normalized(space: &VectorSpace) -> Vec<Vec<u32>> {
    PointSet::projective(space.clone(), |_| true).points
}

fn symplectic_transvections(dim: usize, f: &Arc<Field>) -> Vec<Matrix> {
    let space = VectorSpace::new(dim, f.clone());
    let mut mats = Vec::new();
    for v in all_normalized(&space) {
        for a in additive_basis(f) {
            mats.push(form_transvection(f, &v, a, |x, y| symplectic_form(f, x, y)));
        }
    }
    mats
}

/// `Sp_dim(q)` as a matrix group; `dim` must be even.
pub fn symplectic(dim: usize, q: u32, cfg: &Config) -> Result<FiniteGroup, GroupError> {
    if !dim.is_multiple_of(2) || dim == 0 {
        return Err(GroupError::Inadmissible(format!(
            "symplectic dimension {dim} is not even"
        )));
    }
    let f = field(q)?;
    greedy_matrix_group(dim, q, symplectic_transvections(dim, &f), cfg)
}

/// `PSp_dim(q)` on the projective points.
pub fn projective_symplectic(dim: usize, q: u32, cfg: &Config) -> Result<FiniteGroup, GroupError> {
    if !dim.is_multiple_of(2) || dim == 0 {
        return Err(GroupError::Inadmissible(format!(
            "symplectic dimension {dim} is not even"
        )));
    }
    let f = field(q)?;
    let points = PointSet::projective(VectorSpace::new(dim, f.clone()), |_| true);
    check_degree(points.len(), cfg)?;
    let perms = symplectic_transvections(dim, &f)
        .iter()
        .map(|m| points.matrix_to_perm(m).expect("all points"))
        .collect();
    Ok(greedy_perm_group(points.len(), perms))
}

fn check_degree(n: usize, cfg: &Config) -> Result<(), GroupError> {
    if n > cfg.degree_cap {
        return Err(GroupError::cap(
            "permutation degree",
            n as u64,
            cfg.degree_cap as u64,
        ));
    }
    Ok(())
}

/// `PSU_n(q)` on the isotropic points of the Hermitian form `sum x_i conj(y_(n-1-i))`
/// over `GF(q^2)`.
pub fn projective_special_unitary(
    n: usize,
    q: u32,
    cfg: &Config,
) -> Result<FiniteGroup, GroupError> {
    let q2 = q
        .checked_mul(q)
        .ok_or_else(|| GroupError::Inadmissible("field too large".into()))?;
    let f = field(q2)?;
    let conj = |a: u32| f.pow(a, q as u64);
    let herm = |x: &[u32], y: &[u32]| {
        let mut s = 0;
        for i in 0..x.len() {
            s = f.add(s, f.mul(x[i], conj(y[x.len() - 1 - i])));
        }
        s
    };
    let space = VectorSpace::new(n, f.clone());
    let points = PointSet::projective(space, |v| herm(v, v) == 0);
    check_degree(points.len(), cfg)?;
    // trace-zero scalars: a^q = -a
    let scalars: Vec<u32> = (1..q2).filter(|&a| conj(a) == f.neg(a)).collect();
    let mut perms = Vec::new();
    for v in &points.points {
        for &a in &scalars {
            let m = form_transvection(&f, v, a, herm);
            perms.push(
                points
                    .matrix_to_perm(&m)
                    .expect("unitary maps preserve isotropy"),
            );
        }
    }
    Ok(greedy_perm_group(points.len(), perms))
}

/// `Omega_(2n+1)(q)`, `q` odd, on the singular points of
/// `Q(x) = x_0 x_1 + .. + x_(2n-2) x_(2n-1) + x_(2n)^2`.
pub fn omega_odd(dim: usize, q: u32, cfg: &Config) -> Result<FiniteGroup, GroupError> {
    if dim.is_multiple_of(2) || dim < 3 {
        return Err(GroupError::Inadmissible(format!(
            "orthogonal dimension {dim} must be odd and at least 3"
        )));
    }
    let f = field(q)?;
    if f.characteristic() == 2 {
        return Err(GroupError::Inadmissible(
            "odd-dimensional orthogonal groups need odd q".into(),
        ));
    }
    let quad = |x: &[u32]| {
        let mut s = f.mul(x[dim - 1], x[dim - 1]);
        for i in 0..(dim - 1) / 2 {
            s = f.add(s, f.mul(x[2 * i], x[2 * i + 1]));
        }
        s
    };
    let bilinear = |x: &[u32], y: &[u32]| {
        let sum: Vec<u32> = x.iter().zip(y).map(|(&a, &b)| f.add(a, b)).collect();
        f.sub(f.sub(quad(&sum), quad(x)), quad(y))
    };
    let space = VectorSpace::new(dim, f.clone());
    let singular = PointSet::projective(space.clone(), |v| quad(v) == 0);
    check_degree(singular.len(), cfg)?;
    let reflection = |v: &[u32]| {
        // x -> x - (B(x, v) / Q(v)) v
        let c = f.neg(f.inv(quad(v)).expect("anisotropic"));
        form_transvection(&f, v, c, bilinear)
    };
    let anisotropic: Vec<Vec<u32>> = all_normalized(&space)
        .into_iter()
        .filter(|v| quad(v) != 0)
        .collect();
    let anchor = |square: bool| {
        anisotropic
            .iter()
            .find(|v| f.is_square(quad(v)) == square)
            .cloned()
            .expect("both square classes occur")
    };
    let anchors = [anchor(true), anchor(false)];
    let anchor_refl = [reflection(&anchors[0]), reflection(&anchors[1])];
    let mut perms = Vec::new();
    for v in &anisotropic {
        let class = usize::from(!f.is_square(quad(v)));
        let m = anchor_refl[class].mul(&reflection(v), &f);
        perms.push(
            singular
                .matrix_to_perm(&m)
                .expect("isometries preserve singular points"),
        );
    }
    Ok(greedy_perm_group(singular.len(), perms))
}
