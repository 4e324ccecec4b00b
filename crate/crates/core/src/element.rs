use std::fmt;
use std::sync::Arc;

use crate::error::GroupError;
use crate::field::Field;
use crate::matrix::Matrix;
use crate::perm::Perm;

/// An invertible matrix tagged with the field it lives over.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MatrixElement {
    pub matrix: Matrix,
    pub field: Arc<Field>,
}

/// An atom of every computation: a permutation or an invertible matrix over `GF(q)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum GroupElement {
    Perm(Perm),
    Matrix(MatrixElement),
}

impl GroupElement {
    pub fn perm(p: Perm) -> Self {
        GroupElement::Perm(p)
    }

    pub fn matrix(matrix: Matrix, field: Arc<Field>) -> Self {
        GroupElement::Matrix(MatrixElement { matrix, field })
    }

    pub fn identity_like(&self) -> Self {
        match self {
            GroupElement::Perm(p) => GroupElement::Perm(Perm::identity(p.degree())),
            GroupElement::Matrix(m) => {
                GroupElement::matrix(Matrix::identity(m.matrix.dim()), m.field.clone())
            }
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            GroupElement::Perm(p) => p.is_identity(),
            GroupElement::Matrix(m) => m.matrix.is_identity(),
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<(), GroupError> {
        match (self, other) {
            (GroupElement::Perm(a), GroupElement::Perm(b)) if a.degree() == b.degree() => Ok(()),
            (GroupElement::Matrix(a), GroupElement::Matrix(b))
                if a.matrix.dim() == b.matrix.dim() && a.field.order() == b.field.order() =>
            {
                Ok(())
            }
            _ => Err(GroupError::DomainMismatch(format!(
                "cannot compose {} with {}",
                self.kind_label(),
                other.kind_label()
            ))),
        }
    }

    pub fn kind_label(&self) -> String {
        match self {
            GroupElement::Perm(p) => format!("perm of degree {}", p.degree()),
            GroupElement::Matrix(m) => {
                format!(
                    "{}x{} matrix over GF({})",
                    m.matrix.dim(),
                    m.matrix.dim(),
                    m.field.order()
                )
            }
        }
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Self) -> Result<Self, GroupError> {
        self.check_compatible(other)?;
        Ok(match (self, other) {
            (GroupElement::Perm(a), GroupElement::Perm(b)) => GroupElement::Perm(a.compose(b)),
            (GroupElement::Matrix(a), GroupElement::Matrix(b)) => {
                GroupElement::matrix(a.matrix.mul(&b.matrix, &a.field), a.field.clone())
            }
            _ => unreachable!(),
        })
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = self.identity_like();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base).expect("same domain");
            }
            base = base.compose(&base).expect("same domain");
            e >>= 1;
        }
        acc
    }

    /// Least `k >= 1` with `self^k = 1`.
    pub fn order(&self) -> u64 {
        match self {
            GroupElement::Perm(p) => p.order(),
            GroupElement::Matrix(_) => {
                let mut k = 1;
                let mut x = self.clone();
                while !x.is_identity() {
                    x = x.compose(self).expect("same domain");
                    k += 1;
                }
                k
            }
        }
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Perm(p) => write!(f, "{p}"),
            GroupElement::Matrix(m) => write!(f, "{:?}", m.matrix),
        }
    }
}

/// Least `k >= 1` with `g^k = 1`.
pub fn element_order(g: &GroupElement) -> u64 {
    g.order()
}
