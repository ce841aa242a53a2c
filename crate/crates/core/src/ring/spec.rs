//! Ring descriptors: variable blocks, weights, coefficient field and term order.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::field::FieldSpec;
use super::monomial::{MonomialOrder, OrderKind, MAX_VARS};
use crate::error::{AlgebraError, Result};

/// A named run of consecutive variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VarBlock {
    pub name: String,
    pub start: usize,
    pub len: usize,
    /// `false` for a lone variable printed without index, such as `w`.
    pub indexed: bool,
}

impl VarBlock {
    pub fn indices(&self) -> std::ops::Range<usize> {
        self.start..self.start + self.len
    }

    pub fn mask(&self) -> u32 {
        self.indices().fold(0, |m, i| m | (1 << i))
    }
}

/// A polynomial ring over an exact field with a fixed monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingSpec {
    names: Vec<String>,
    weights: Vec<u32>,
    blocks: Vec<VarBlock>,
    field: FieldSpec,
    order: MonomialOrder,
}

pub type RingRef = Arc<RingSpec>;

/// Incremental constructor for [`RingSpec`].
pub struct RingBuilder {
    field: FieldSpec,
    names: Vec<String>,
    weights: Vec<u32>,
    blocks: Vec<VarBlock>,
}

impl RingBuilder {
    /// Adds `len` variables `name1..name{len}` of weight 1.
    pub fn block(self, name: &str, len: usize) -> Self {
        self.weighted_block(name, len, 1)
    }

    pub fn weighted_block(mut self, name: &str, len: usize, weight: u32) -> Self {
        let start = self.names.len();
        for i in 1..=len {
            self.names.push(format!("{}{}", name.to_ascii_lowercase(), i));
            self.weights.push(weight);
        }
        self.blocks.push(VarBlock { name: name.to_ascii_lowercase(), start, len, indexed: true });
        self
    }

    /// Adds a single unindexed variable.
    pub fn single(self, name: &str) -> Self {
        self.weighted_single(name, 1)
    }

    pub fn weighted_single(mut self, name: &str, weight: u32) -> Self {
        let start = self.names.len();
        self.names.push(name.to_ascii_lowercase());
        self.weights.push(weight);
        self.blocks.push(VarBlock { name: name.to_ascii_lowercase(), start, len: 1, indexed: false });
        self
    }

    pub fn build(self) -> Result<RingRef> {
        let n = self.names.len();
        if n > MAX_VARS {
            return Err(AlgebraError::Config(format!("{n} variables exceed the limit of {MAX_VARS}")));
        }
        for (i, a) in self.names.iter().enumerate() {
            if self.names[..i].contains(a) {
                return Err(AlgebraError::Config(format!("duplicate variable name '{a}'")));
            }
        }
        if self.weights.contains(&0) {
            return Err(AlgebraError::Config("weights must be positive".into()));
        }
        Ok(Arc::new(RingSpec {
            order: MonomialOrder::degrevlex(n),
            names: self.names,
            weights: self.weights,
            blocks: self.blocks,
            field: self.field,
        }))
    }
}

impl RingSpec {
    pub fn builder(field: FieldSpec) -> RingBuilder {
        RingBuilder { field, names: Vec::new(), weights: Vec::new(), blocks: Vec::new() }
    }

    /// `k[x1..xn]` with degrevlex.
    pub fn affine(n: usize, field: FieldSpec) -> RingRef {
        RingSpec::builder(field).block("x", n).build().expect("valid ring")
    }

    /// `k[name1..name{len}]` with degrevlex.
    pub fn named(name: &str, len: usize, field: FieldSpec) -> RingRef {
        RingSpec::builder(field).block(name, len).build().expect("valid ring")
    }

    /// The ambient ring `k[X, Y, Z, W]` with blocks of sizes `n, n+1, n, 1`,
    /// `W` of the given weight and every other variable of weight 1.
    pub fn kernel_ring(n: usize, w_weight: u32, field: FieldSpec) -> Result<RingRef> {
        RingSpec::builder(field).block("x", n).block("y", n + 1).block("z", n).weighted_single("w", w_weight).build()
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, var: usize) -> &str {
        &self.names[var]
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn blocks(&self) -> &[VarBlock] {
        &self.blocks
    }

    pub fn block(&self, name: &str) -> Option<&VarBlock> {
        self.blocks.iter().find(|b| b.name.eq_ignore_ascii_case(name))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Case-insensitive variable lookup.
    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|v| v.eq_ignore_ascii_case(name))
    }

    pub fn var(&self, name: &str) -> Result<usize> {
        self.var_index(name).ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))
    }

    /// Indices of a block's variables; panics if the block does not exist.
    pub fn block_vars(&self, name: &str) -> Vec<usize> {
        self.block(name).unwrap_or_else(|| panic!("no block named {name}")).indices().collect()
    }

    pub fn all_weights_one(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    /// Same variables with another order.
    pub fn with_order(&self, order: MonomialOrder) -> RingRef {
        assert_eq!(order.nvars(), self.nvars(), "order/ring size mismatch");
        Arc::new(RingSpec { order, ..self.clone() })
    }

    /// Same variables and order with other weights.
    pub fn with_weights(&self, weights: Vec<u32>) -> RingRef {
        assert_eq!(weights.len(), self.nvars());
        assert!(weights.iter().all(|&w| w > 0));
        Arc::new(RingSpec { weights, ..self.clone() })
    }

    /// Whether the two rings share variables and field (orders may differ).
    pub fn same_variables(&self, other: &RingSpec) -> bool {
        self.names == other.names && self.field == other.field
    }

    /// Same variable names, any field.
    pub fn same_variables_except_field(&self, other: &RingSpec) -> bool {
        self.names == other.names
    }

    /// Same variables, blocks, weights and order over another field.
    pub fn with_field(&self, field: FieldSpec) -> RingRef {
        Arc::new(RingSpec { field, ..self.clone() })
    }

    /// Appends one unindexed auxiliary variable (weight 1). The order becomes an
    /// elimination order for it when `eliminate` is set, degrevlex with the new
    /// variable smallest otherwise.
    pub fn extend(&self, name: &str, eliminate: bool) -> Result<RingRef> {
        let mut b = RingBuilder {
            field: self.field,
            names: self.names.clone(),
            weights: self.weights.clone(),
            blocks: self.blocks.clone(),
        };
        if self.var_index(name).is_some() {
            return Err(AlgebraError::Config(format!("variable '{name}' already present")));
        }
        b = b.single(name);
        let ring = b.build()?;
        let n = ring.nvars();
        let mut prio = self.order.priority.clone();
        prio.push(n - 1);
        let order = if eliminate {
            MonomialOrder::elimination(n, &[n - 1])
        } else {
            let kind = match self.order.kind {
                OrderKind::Lex => OrderKind::Lex,
                _ => OrderKind::Degrevlex,
            };
            MonomialOrder { kind, priority: prio }
        };
        Ok(ring.with_order(order))
    }

    /// Drops the variables in `mask`, keeping order kind degrevlex.
    pub fn restrict(&self, mask: u32) -> Result<(RingRef, Vec<Option<usize>>)> {
        let mut b = RingSpec::builder(self.field);
        let mut map = vec![None; self.nvars()];
        let mut next = 0;
        for blk in &self.blocks {
            let keep: Vec<usize> = blk.indices().filter(|&i| mask & (1 << i) == 0).collect();
            if keep.is_empty() {
                continue;
            }
            let start = b.names.len();
            for &i in &keep {
                b.names.push(self.names[i].clone());
                b.weights.push(self.weights[i]);
                map[i] = Some(next);
                next += 1;
            }
            b.blocks.push(VarBlock { name: blk.name.clone(), start, len: keep.len(), indexed: blk.indexed });
        }
        Ok((b.build()?, map))
    }

    /// Header line used by the ideal file format.
    pub fn header(&self) -> String {
        let blocks: Vec<String> = self.blocks.iter().map(|b| format!("{}:{}", b.name, b.len)).collect();
        let n = self.block("x").map_or(0, |b| b.len);
        format!("ring n={} blocks={} field={}", n, blocks.join(","), self.field)
    }

    /// Inverse of [`RingSpec::header`]. Blocks of length one named anything
    /// other than `x`, `y`, `z` become unindexed variables.
    pub fn parse_header(line: &str) -> Result<RingRef> {
        let err = |m: &str| AlgebraError::Parse { offset: 0, message: m.to_string() };
        let mut parts = line.split_whitespace();
        if parts.next() != Some("ring") {
            return Err(err("header must start with 'ring'"));
        }
        let mut field = None;
        let mut blocks = None;
        for p in parts {
            if let Some(v) = p.strip_prefix("field=") {
                field = Some(FieldSpec::parse(v)?);
            } else if let Some(v) = p.strip_prefix("blocks=") {
                blocks = Some(v.to_string());
            } else if p.starts_with("n=") {
                continue;
            } else {
                return Err(err(&format!("unexpected header token '{p}'")));
            }
        }
        let field = field.ok_or_else(|| err("missing field="))?;
        let blocks = blocks.ok_or_else(|| err("missing blocks="))?;
        let mut b = RingSpec::builder(field);
        for spec in blocks.split(',') {
            let (name, len) = spec.split_once(':').ok_or_else(|| err("block must be name:len"))?;
            let len: usize = len.parse().map_err(|_| err("bad block length"))?;
            b = if len == 1 && !matches!(name, "x" | "y" | "z") { b.single(name) } else { b.block(name, len) };
        }
        b.build()
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.names.join(","))
    }
}
