//! Exhaustive injectivity certificates for explicit maps.

use std::collections::HashMap;
use std::hash::Hash;

/// Two domain elements with the same image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Collision<D, C> {
    pub first: D,
    pub second: D,
    pub image: C,
}

/// The full graph of a map on a finite domain, with the first collision
/// found (in domain order), if any.
#[derive(Debug, Clone)]
pub struct InjectionCheck<D, C> {
    pub mapping: Vec<(D, C)>,
    pub collision: Option<Collision<D, C>>,
    /// Every image lies in the stated codomain.
    pub codomain_ok: bool,
    /// Sizes of the codomain factors, when the codomain is a product.
    pub codomain_sizes: Vec<usize>,
}

impl<D: Clone, C: Clone + Eq + Hash> InjectionCheck<D, C> {
    pub fn certify(mapping: Vec<(D, C)>, codomain_ok: bool, codomain_sizes: Vec<usize>) -> Self {
        let mut seen: HashMap<&C, &D> = HashMap::with_capacity(mapping.len());
        let mut collision = None;
        for (d, c) in &mapping {
            if let Some(prev) = seen.insert(c, d) {
                collision = Some(Collision {
                    first: prev.clone(),
                    second: d.clone(),
                    image: c.clone(),
                });
                break;
            }
        }
        InjectionCheck {
            mapping,
            collision,
            codomain_ok,
            codomain_sizes,
        }
    }

    pub fn is_injective(&self) -> bool {
        self.collision.is_none()
    }

    pub fn domain_size(&self) -> usize {
        self.mapping.len()
    }

    /// Product of the codomain factor sizes.
    pub fn codomain_size(&self) -> usize {
        self.codomain_sizes.iter().product()
    }
}
