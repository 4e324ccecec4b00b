//! Square matrices over a small finite field and their action on row vectors.

use std::fmt;
use std::sync::Arc;

use crate::error::GroupError;
use crate::field::Field;
use crate::perm::Perm;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    dim: usize,
    /// Row-major entries.
    entries: Vec<u32>,
}

impl Matrix {
    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1;
        }
        Matrix { dim, entries }
    }

    pub fn from_entries(dim: usize, entries: Vec<u32>, field: &Field) -> Result<Self, GroupError> {
        if entries.len() != dim * dim {
            return Err(GroupError::MalformedElement(format!(
                "expected {} entries for a {dim}x{dim} matrix, got {}",
                dim * dim,
                entries.len()
            )));
        }
        if let Some(&bad) = entries.iter().find(|&&e| e >= field.order()) {
            return Err(GroupError::MalformedElement(format!(
                "entry {bad} outside [0, {})",
                field.order()
            )));
        }
        let m = Matrix { dim, entries };
        if m.det(field) == 0 {
            return Err(GroupError::MalformedElement("singular matrix".into()));
        }
        Ok(m)
    }

    pub(crate) fn from_entries_unchecked(dim: usize, entries: Vec<u32>) -> Self {
        Matrix { dim, entries }
    }

    pub fn from_rows(rows: &[&[u32]], field: &Field) -> Result<Self, GroupError> {
        let dim = rows.len();
        let entries = rows.iter().flat_map(|r| r.iter().copied()).collect();
        Self::from_entries(dim, entries, field)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.dim + j]
    }

    pub fn mul(&self, other: &Matrix, f: &Field) -> Matrix {
        let d = self.dim;
        let mut out = vec![0u32; d * d];
        for i in 0..d {
            for k in 0..d {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..d {
                    let idx = i * d + j;
                    out[idx] = f.add(out[idx], f.mul(a, other.get(k, j)));
                }
            }
        }
        Matrix {
            dim: d,
            entries: out,
        }
    }

    pub fn det(&self, f: &Field) -> u32 {
        let d = self.dim;
        let mut a = self.entries.clone();
        let mut det = 1u32;
        for col in 0..d {
            let Some(piv) = (col..d).find(|&r| a[r * d + col] != 0) else {
                return 0;
            };
            if piv != col {
                for j in 0..d {
                    a.swap(piv * d + j, col * d + j);
                }
                det = f.neg(det);
            }
            let pv = a[col * d + col];
            det = f.mul(det, pv);
            let pinv = f.inv(pv).expect("nonzero pivot");
            for r in col + 1..d {
                let factor = f.mul(a[r * d + col], pinv);
                if factor == 0 {
                    continue;
                }
                for j in col..d {
                    let v = f.mul(factor, a[col * d + j]);
                    a[r * d + j] = f.sub(a[r * d + j], v);
                }
            }
        }
        det
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.dim)
    }

    /// Row vector times matrix.
    pub fn act(&self, v: &[u32], f: &Field) -> Vec<u32> {
        let d = self.dim;
        let mut out = vec![0u32; d];
        for (i, &vi) in v.iter().enumerate() {
            if vi == 0 {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = f.add(*o, f.mul(vi, self.get(i, j)));
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let d = self.dim;
        let mut out = vec![0; d * d];
        for i in 0..d {
            for j in 0..d {
                out[j * d + i] = self.get(i, j);
            }
        }
        Matrix {
            dim: d,
            entries: out,
        }
    }

    /// Applies a field map entrywise (e.g. Frobenius).
    pub fn map_entries(&self, g: impl Fn(u32) -> u32) -> Matrix {
        Matrix {
            dim: self.dim,
            entries: self.entries.iter().map(|&e| g(e)).collect(),
        }
    }

    pub fn scalar(dim: usize, c: u32) -> Matrix {
        let mut m = Matrix::identity(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = c;
        }
        m
    }

    /// `I + a * E_{ij}`.
    pub fn elementary(dim: usize, i: usize, j: usize, a: u32) -> Matrix {
        let mut m = Matrix::identity(dim);
        m.entries[i * dim + j] = a;
        m
    }

    pub fn diagonal(diag: &[u32]) -> Matrix {
        let d = diag.len();
        let mut m = Matrix::identity(d);
        for (i, &x) in diag.iter().enumerate() {
            m.entries[i * d + i] = x;
        }
        m
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.dim {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = (0..self.dim).map(|j| self.get(i, j).to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// `F_q^d` with nonzero row vectors numbered `0..q^d-1`.
///
/// Vector `v` has code `sum v_i q^i`; its point label is `code - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorSpace {
    pub dim: usize,
    pub field: Arc<Field>,
}

impl VectorSpace {
    pub fn new(dim: usize, field: Arc<Field>) -> Self {
        VectorSpace { dim, field }
    }

    pub fn size(&self) -> u64 {
        (self.field.order() as u64).pow(self.dim as u32)
    }

    pub fn nonzero_count(&self) -> u64 {
        self.size() - 1
    }

    pub fn encode(&self, v: &[u32]) -> u64 {
        let q = self.field.order() as u64;
        v.iter().rev().fold(0u64, |acc, &c| acc * q + c as u64)
    }

    pub fn decode(&self, mut code: u64) -> Vec<u32> {
        let q = self.field.order() as u64;
        let mut v = vec![0u32; self.dim];
        for x in v.iter_mut() {
            *x = (code % q) as u32;
            code /= q;
        }
        v
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim];
        v[i] = 1;
        v
    }

    /// The permutation induced on nonzero vectors.
    pub fn matrix_to_perm(&self, m: &Matrix) -> Perm {
        let n = self.nonzero_count();
        let images = (1..=n)
            .map(|code| (self.encode(&m.act(&self.decode(code), &self.field)) - 1) as u32)
            .collect();
        Perm::from_images_unchecked(images)
    }

    /// Recovers the matrix of a vector-induced permutation from the images of the basis.
    pub fn perm_to_matrix(&self, p: &Perm) -> Matrix {
        let d = self.dim;
        let mut entries = Vec::with_capacity(d * d);
        for i in 0..d {
            let label = self.encode(&self.basis_vector(i)) - 1;
            let image = self.decode(p.apply(label as u32) as u64 + 1);
            entries.extend(image);
        }
        Matrix::from_entries_unchecked(d, entries)
    }

    /// Scales `v` so that its first nonzero coordinate is 1.
    pub fn normalize(&self, v: &[u32]) -> Vec<u32> {
        let f = &self.field;
        match v.iter().find(|&&c| c != 0) {
            None => v.to_vec(),
            Some(&lead) => {
                let inv = f.inv(lead).expect("nonzero");
                v.iter().map(|&c| f.mul(c, inv)).collect()
            }
        }
    }
}

/// A set of projective points (lines) closed under a matrix group, used for faithful
/// actions of projective groups.
#[derive(Clone, Debug)]
pub struct PointSet {
    pub space: VectorSpace,
    /// Normalized representatives.
    pub points: Vec<Vec<u32>>,
    index: std::collections::HashMap<u64, u32>,
}

impl PointSet {
    /// All projective points satisfying `keep` (applied to normalized vectors).
    pub fn projective(space: VectorSpace, keep: impl Fn(&[u32]) -> bool) -> Self {
        let mut points = Vec::new();
        let mut index = std::collections::HashMap::new();
        for code in 1..space.size() {
            let v = space.decode(code);
            if space.normalize(&v) != v || !keep(&v) {
                continue;
            }
            index.insert(code, points.len() as u32);
            points.push(v);
        }
        PointSet {
            space,
            points,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The induced permutation, or `None` if the set is not invariant.
    pub fn matrix_to_perm(&self, m: &Matrix) -> Option<Perm> {
        let mut images = Vec::with_capacity(self.points.len());
        for v in &self.points {
            let w = self.space.normalize(&m.act(v, &self.space.field));
            images.push(*self.index.get(&self.space.encode(&w))?);
        }
        Some(Perm::from_images_unchecked(images))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_and_singularity() {
        let f = Field::new(5).unwrap();
        let m = Matrix::from_rows(&[&[1, 2], &[3, 4]], &f).unwrap();
        // 4 - 6 = -2 = 3 mod 5
        assert_eq!(m.det(&f), 3);
        assert!(Matrix::from_rows(&[&[1, 2], &[2, 4]], &f).is_err());
        assert!(Matrix::from_rows(&[&[1, 5], &[0, 1]], &f).is_err());
    }

    #[test]
    fn action_is_a_right_action() {
        let f = Arc::new(Field::new(3).unwrap());
        let space = VectorSpace::new(2, f.clone());
        let a = Matrix::from_rows(&[&[1, 1], &[0, 1]], &f).unwrap();
        let b = Matrix::from_rows(&[&[0, 1], &[2, 0]], &f).unwrap();
        let pa = space.matrix_to_perm(&a);
        let pb = space.matrix_to_perm(&b);
        assert_eq!(space.matrix_to_perm(&a.mul(&b, &f)), pa.compose(&pb));
        assert_eq!(space.perm_to_matrix(&pa), a);
    }

    #[test]
    fn projective_line_count() {
        let f = Arc::new(Field::new(4).unwrap());
        let set = PointSet::projective(VectorSpace::new(2, f), |_| true);
        assert_eq!(set.len(), 5);
    }
}
