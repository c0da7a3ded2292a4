use super::{GroupContext, GroupElement};
use crate::error::{Error, Result};

/// Largest group for which a full multiplication table is built.
pub const TABLE_LIMIT: usize = 4096;

/// Elements indexed by enumeration order with a precomputed product table.
///
/// Index arithmetic is what the exhaustive search runs on; everything it
/// returns is translated back into [`GroupElement`] values.
#[derive(Debug, Clone)]
pub struct CayleyTable {
    ctx: GroupContext,
    elements: Vec<GroupElement>,
    key_to_index: Vec<u32>,
    products: Vec<u16>,
    inverses: Vec<u16>,
    identity: u16,
}

impl CayleyTable {
    pub fn new(ctx: GroupContext) -> Result<Self> {
        let order = ctx.order();
        if order > TABLE_LIMIT as u64 {
            return Err(Error::TooLarge(format!(
                "{ctx} has {order} elements; multiplication tables stop at {TABLE_LIMIT}"
            )));
        }
        let elements = ctx.elements()?;
        let size = elements.len();
        let mut key_to_index = vec![u32::MAX; ctx.key_space()];
        for (i, g) in elements.iter().enumerate() {
            key_to_index[ctx.key(g)] = i as u32;
        }
        let lookup = |g: &GroupElement| key_to_index[ctx.key(g)] as u16;
        let mut products = Vec::with_capacity(size * size);
        for g in &elements {
            for h in &elements {
                products.push(lookup(&ctx.mul_unchecked(g, h)));
            }
        }
        let inverses = elements.iter().map(|g| lookup(&ctx.inverse_unchecked(g))).collect();
        let identity = lookup(&ctx.identity());
        Ok(Self { ctx, elements, key_to_index, products, inverses, identity })
    }

    pub fn ctx(&self) -> GroupContext {
        self.ctx
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, i: usize) -> &GroupElement {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn index_of(&self, g: &GroupElement) -> Option<usize> {
        if !self.ctx.contains(g) {
            return None;
        }
        match self.key_to_index[self.ctx.key(g)] {
            u32::MAX => None,
            i => Some(i as usize),
        }
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.products[a * self.elements.len() + b] as usize
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity as usize
    }

    /// `b a b^-1`, the quandle product `a ▷ b`.
    #[inline]
    pub fn conjugate(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(b, a), self.inverse(b))
    }

    /// First element (in enumeration order) of every conjugacy class.
    pub fn class_representatives(&self) -> Vec<usize> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut reps = Vec::new();
        for a in 0..n {
            if seen[a] {
                continue;
            }
            reps.push(a);
            for g in 0..n {
                seen[self.conjugate(a, g)] = true;
            }
        }
        reps
    }
}
