use crate::chartab::CharacterTable;
use crate::cyclo::{Cyclo, FqElem, StarMap};
use crate::error::{Error, Result};
use crate::linalg::{rank, Scalar};
use crate::numth::{is_prime, valuation};

/// `lambda_chi(K) = omega_chi(K)*` for every irreducible `chi` and class `K`.
pub fn lambda_table(t: &CharacterTable, star: &StarMap) -> Result<Vec<Vec<FqElem>>> {
    let omega = t.central_characters()?;
    omega
        .values
        .iter()
        .map(|row| row.iter().map(|w| star.reduce(w)).collect())
        .collect()
}

/// One `p`-block.
#[derive(Clone, Debug, PartialEq)]
pub struct Block {
    pub irr: Vec<usize>,
    /// Brauer characters, filled in once a decomposition is attached.
    pub ibr: Vec<usize>,
    /// `|IBr(B)|`, the rank of the block's rows on `p`-regular classes.
    pub ibr_count: usize,
    pub lambda: Vec<FqElem>,
    pub defect: u32,
    /// Heights of the members of `irr`, in the same order.
    pub heights: Vec<u32>,
    pub principal: bool,
}

#[derive(Clone, Debug)]
pub struct BlockPartition {
    pub prime: u64,
    pub star: StarMap,
    pub blocks: Vec<Block>,
    pub(crate) block_of: Vec<usize>,
}

impl BlockPartition {
    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Index of the block containing the irreducible character `i`.
    pub fn block_of(&self, i: usize) -> usize {
        self.block_of[i]
    }

    /// Index of the block with central character `lambda`, if any.
    pub fn find(&self, lambda: &[FqElem]) -> Option<usize> {
        self.blocks.iter().position(|b| b.lambda == lambda)
    }

    /// Blocks as sets of ordinary characters.
    pub fn irr_sets(&self) -> Vec<Vec<usize>> {
        self.blocks.iter().map(|b| b.irr.clone()).collect()
    }
}

/// The map used by default for a table: canonical, sized by the exponent.
pub fn default_star(t: &CharacterTable, p: u64) -> Result<StarMap> {
    StarMap::canonical(p, t.exponent())
}

/// Groups the irreducible characters by equal `lambda` rows. Blocks are
/// ordered by their least member, so the principal block comes first.
pub fn block_partition(t: &CharacterTable, star: &StarMap) -> Result<BlockPartition> {
    let p = star.prime();
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let lambda = lambda_table(t, star)?;
    let a = valuation(t.order(), p);
    let preg = t.p_regular_classes(p);
    let mut blocks: Vec<Block> = Vec::new();
    let mut block_of = vec![0; t.num_irr()];
    for (i, row) in lambda.iter().enumerate() {
        match blocks.iter().position(|b| &b.lambda == row) {
            Some(b) => {
                blocks[b].irr.push(i);
                block_of[i] = b;
            }
            None => {
                block_of[i] = blocks.len();
                blocks.push(Block {
                    irr: vec![i],
                    ibr: Vec::new(),
                    ibr_count: 0,
                    lambda: row.clone(),
                    defect: 0,
                    heights: Vec::new(),
                    principal: t.is_principal(i),
                });
            }
        }
    }
    for b in &mut blocks {
        let vals: Vec<u32> = b.irr.iter().map(|&i| valuation(t.degree(i), p)).collect();
        let min = *vals.iter().min().expect("blocks are nonempty");
        b.defect = a - min;
        b.heights = vals.iter().map(|v| v - min).collect();
        let rows: Vec<Vec<Cyclo>> = b
            .irr
            .iter()
            .map(|&i| preg.iter().map(|&k| t.value(i, k).clone()).collect())
            .collect();
        b.ibr_count = rank(&rows);
        if b.ibr_count == 0 || b.ibr_count > b.irr.len() {
            return Err(Error::Verification(format!(
                "block of {} has {} Brauer characters",
                b.irr[0] + 1,
                b.ibr_count
            )));
        }
        b.principal = b.irr.iter().any(|&i| t.is_principal(i));
    }
    let total: usize = blocks.iter().map(|b| b.ibr_count).sum();
    if total != preg.len() {
        return Err(Error::Verification(format!(
            "blocks carry {total} Brauer characters for {} p-regular classes",
            preg.len()
        )));
    }
    Ok(BlockPartition {
        prime: p,
        star: star.clone(),
        blocks,
        block_of,
    })
}

/// Checks `lambda(K) lambda(L) = sum_M a_KLM* lambda(M)` for every pair of
/// classes, with structure constants supplied as `a(k, l, m)`.
pub fn is_multiplicative(lambda: &[FqElem], a: impl Fn(usize, usize, usize) -> u64) -> bool {
    let r = lambda.len();
    let zero = lambda[0].zero_like();
    (0..r).all(|k| {
        (0..r).all(|l| {
            let rhs = (0..r).fold(zero.clone(), |acc, m| {
                let c = a(k, l, m);
                if c == 0 {
                    acc
                } else {
                    acc.add(&lambda[m].scale_int(c))
                }
            });
            lambda[k].mul(&lambda[l]) == rhs
        })
    })
}
