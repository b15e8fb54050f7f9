//! Monomials with exponents at most two, enough to represent products of
//! two square-free monomials and their colons by square-free monomials.

use crate::vertex_set::VertexSet;

/// `x^a` with every `a_i ∈ {0, 1, 2}`, stored as the support and the set of
/// squared variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    support: VertexSet,
    squared: VertexSet,
}

impl Monomial {
    pub fn square_free(s: &VertexSet) -> Self {
        Monomial {
            support: s.clone(),
            squared: VertexSet::empty(s.capacity()),
        }
    }

    /// `x_a · x_b` for square-free `x_a`, `x_b`.
    pub fn product(a: &VertexSet, b: &VertexSet) -> Self {
        Monomial {
            support: a.union(b),
            squared: a.intersection(b),
        }
    }

    pub fn support(&self) -> &VertexSet {
        &self.support
    }

    pub fn exponent(&self, v: usize) -> u8 {
        u8::from(self.support.contains(v)) + u8::from(self.squared.contains(v))
    }

    pub fn is_square_free(&self) -> bool {
        self.squared.is_empty()
    }

    /// Whether the square-free monomial `x_s` divides `self`.
    pub fn divisible_by(&self, s: &VertexSet) -> bool {
        s.is_subset(&self.support)
    }

    /// Whether `self` divides the square-free monomial `x_s`.
    pub fn divides(&self, s: &VertexSet) -> bool {
        self.is_square_free() && self.support.is_subset(s)
    }

    /// `self / gcd(self, x_s)`, the generator of `(self : x_s)`.
    pub fn colon(&self, s: &VertexSet) -> Self {
        Monomial {
            support: self
                .support
                .difference(s)
                .union(&self.squared.intersection(s)),
            squared: self.squared.difference(s),
        }
    }
}
