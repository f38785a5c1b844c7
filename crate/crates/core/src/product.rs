//! Direct products with retained coordinate metadata.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::semigroup::FiniteSemigroup;

/// A direct product of finite semigroups. Element ids are mixed-radix codes
/// over the factor orders with the last factor varying fastest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectProduct {
    algebra: FiniteSemigroup,
    factors: Vec<FiniteSemigroup>,
    factor_orders: Vec<usize>,
}

impl DirectProduct {
    /// Builds the componentwise product; at least one factor required.
    pub fn new(factors: &[&FiniteSemigroup]) -> Self {
        assert!(!factors.is_empty(), "a product needs at least one factor");
        let factor_orders: Vec<usize> = factors.iter().map(|f| f.order()).collect();
        let order: usize = factor_orders.iter().product();
        let decode = |mut id: usize| -> Vec<usize> {
            let mut coords = alloc::vec![0; factor_orders.len()];
            for (i, &m) in factor_orders.iter().enumerate().rev() {
                coords[i] = id % m;
                id /= m;
            }
            coords
        };
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            let ca = decode(a);
            for b in 0..order {
                let cb = decode(b);
                let mut id = 0;
                for (i, f) in factors.iter().enumerate() {
                    id = id * factor_orders[i] + f.mul(ca[i], cb[i]);
                }
                table.push(id);
            }
        }
        let names: Vec<String> = (0..order)
            .map(|id| {
                let coords = decode(id);
                let parts: Vec<String> = coords
                    .iter()
                    .zip(factors)
                    .map(|(&c, f)| f.element_name(c))
                    .collect();
                format!("({})", parts.join(","))
            })
            .collect();
        // Componentwise products of associative tables are associative, so
        // validation cannot fail.
        let algebra = FiniteSemigroup::new(order, table)
            .expect("componentwise product is associative")
            .with_names(names);
        DirectProduct {
            algebra,
            factors: factors.iter().map(|&f| f.clone()).collect(),
            factor_orders,
        }
    }

    pub fn algebra(&self) -> &FiniteSemigroup {
        &self.algebra
    }

    pub fn into_algebra(self) -> FiniteSemigroup {
        self.algebra
    }

    pub fn factors(&self) -> &[FiniteSemigroup] {
        &self.factors
    }

    pub fn factor_orders(&self) -> &[usize] {
        &self.factor_orders
    }

    pub fn encode(&self, coords: &[usize]) -> usize {
        debug_assert_eq!(coords.len(), self.factor_orders.len());
        coords
            .iter()
            .zip(&self.factor_orders)
            .fold(0, |id, (&c, &m)| {
                debug_assert!(c < m);
                id * m + c
            })
    }

    pub fn decode(&self, mut id: usize) -> Vec<usize> {
        let mut coords = alloc::vec![0; self.factor_orders.len()];
        for (i, &m) in self.factor_orders.iter().enumerate().rev() {
            coords[i] = id % m;
            id /= m;
        }
        coords
    }
}
