use std::fmt;

use serde::{Deserialize, Serialize};

use super::PolyError;

/// How a variable `(block, index)` is printed as `x[·,·]`.
///
/// Row-graded matrices put row `i` in block `i`, so `x[block,index]` is also
/// the matrix position. Column-graded matrices put column `j` in block `j`;
/// printing `x[index,block]` keeps the matrix-position reading there too.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VarNaming {
    #[default]
    BlockIndex,
    IndexBlock,
}

/// A variable of the block-graded ring, zero-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId {
    pub block: usize,
    pub index: usize,
}

impl VarId {
    pub fn new(block: usize, index: usize) -> Self {
        VarId { block, index }
    }
}

/// A polynomial ring with `v` grading blocks, block `i` holding `u_i`
/// variables of degree `e_i`.
///
/// Variables are ranked block-major: `x[1,1] > x[1,2] > ... > x[2,1] > ...`,
/// and their global index follows that ranking (index 0 is the largest).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingSpec {
    block_sizes: Vec<usize>,
    offsets: Vec<usize>,
    naming: VarNaming,
}

impl RingSpec {
    /// Every block must be nonempty.
    pub fn new(block_sizes: Vec<usize>) -> Result<Self, PolyError> {
        if let Some(b) = block_sizes.iter().position(|&u| u == 0) {
            return Err(PolyError::EmptyBlock(b + 1));
        }
        Ok(Self::allowing_empty_blocks(block_sizes))
    }

    /// Like [`RingSpec::new`] but accepts blocks without variables. Used for
    /// the auxiliary rings of Borel ideals built from a Φ map, where a block
    /// can have size zero.
    pub fn allowing_empty_blocks(block_sizes: Vec<usize>) -> Self {
        let mut offsets = Vec::with_capacity(block_sizes.len());
        let mut acc = 0;
        for &u in &block_sizes {
            offsets.push(acc);
            acc += u;
        }
        RingSpec { block_sizes, offsets, naming: VarNaming::BlockIndex }
    }

    pub fn with_naming(mut self, naming: VarNaming) -> Self {
        self.naming = naming;
        self
    }

    pub fn naming(&self) -> VarNaming {
        self.naming
    }

    /// Number of grading blocks.
    pub fn blocks(&self) -> usize {
        self.block_sizes.len()
    }

    pub fn block_sizes(&self) -> &[usize] {
        &self.block_sizes
    }

    pub fn block_size(&self, block: usize) -> usize {
        self.block_sizes[block]
    }

    pub fn nvars(&self) -> usize {
        self.block_sizes.iter().sum()
    }

    /// Global index of a variable.
    pub fn var(&self, block: usize, index: usize) -> usize {
        debug_assert!(index < self.block_sizes[block]);
        self.offsets[block] + index
    }

    pub fn checked_var(&self, id: VarId) -> Result<usize, PolyError> {
        if id.block >= self.blocks() || id.index >= self.block_sizes[id.block] {
            return Err(PolyError::BadVariable(format!("({},{})", id.block + 1, id.index + 1)));
        }
        Ok(self.var(id.block, id.index))
    }

    pub fn var_id(&self, global: usize) -> VarId {
        let block = self.block_of(global);
        VarId { block, index: global - self.offsets[block] }
    }

    pub fn block_of(&self, global: usize) -> usize {
        // Blocks are few; a linear scan beats a binary search here.
        let mut b = 0;
        while b + 1 < self.offsets.len() && self.offsets[b + 1] <= global {
            b += 1;
        }
        // Skip empty blocks sharing the same offset.
        while self.block_sizes[b] == 0 {
            b += 1;
        }
        b
    }

    /// Block index of every variable, in global order.
    pub fn block_map(&self) -> Vec<usize> {
        (0..self.blocks()).flat_map(|b| std::iter::repeat_n(b, self.block_sizes[b])).collect()
    }

    pub fn var_name(&self, global: usize) -> String {
        let id = self.var_id(global);
        let (a, b) = match self.naming {
            VarNaming::BlockIndex => (id.block, id.index),
            VarNaming::IndexBlock => (id.index, id.block),
        };
        format!("x[{},{}]", a + 1, b + 1)
    }

    /// Inverse of [`RingSpec::var_name`].
    pub fn parse_var(&self, name: &str) -> Result<usize, PolyError> {
        let bad = || PolyError::BadVariable(name.to_string());
        let inner = name.trim().strip_prefix("x[").and_then(|s| s.strip_suffix(']')).ok_or_else(bad)?;
        let (a, b) = inner.split_once(',').ok_or_else(bad)?;
        let a: usize = a.trim().parse().map_err(|_| bad())?;
        let b: usize = b.trim().parse().map_err(|_| bad())?;
        if a == 0 || b == 0 {
            return Err(bad());
        }
        let id = match self.naming {
            VarNaming::BlockIndex => VarId::new(a - 1, b - 1),
            VarNaming::IndexBlock => VarId::new(b - 1, a - 1),
        };
        self.checked_var(id).map_err(|_| bad())
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K[blocks {:?}]", self.block_sizes)
    }
}

/// A vector in N^v.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Multidegree(pub Vec<usize>);

impl Multidegree {
    pub fn zero(v: usize) -> Self {
        Multidegree(vec![0; v])
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Indices with a positive entry, as a bitmask over blocks.
    pub fn support_mask(&self) -> usize {
        self.0.iter().enumerate().filter(|(_, &a)| a > 0).fold(0, |m, (i, _)| m | (1 << i))
    }

    pub fn support(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, &a)| a > 0).map(|(i, _)| i).collect()
    }
}
