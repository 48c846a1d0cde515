use crate::error::{Error, Result};

const BLOCK: usize = 64;

/// Range-minimum queries returning the leftmost minimal index.
///
/// Positions are grouped in blocks of 64. Inside a block, each position keeps
/// a bitmask of the in-block monotone stack ending at it, so an in-block query
/// is one mask and one `trailing_zeros`. Block minima go into a sparse table.
/// Size is O(n) words; queries are O(1).
#[derive(Clone, Debug)]
pub struct RmqIndex<T> {
    values: Vec<T>,
    masks: Vec<u64>,
    /// `table[k][b]`: leftmost minimal index over blocks `b .. b + 2^k`.
    table: Vec<Vec<u32>>,
}

impl<T: PartialOrd + Copy> RmqIndex<T> {
    pub fn new(values: Vec<T>) -> RmqIndex<T> {
        let n = values.len();
        let mut masks = vec![0u64; n];
        let blocks = n.div_ceil(BLOCK);
        let mut block_min = Vec::with_capacity(blocks);
        let mut stack: Vec<usize> = Vec::with_capacity(BLOCK);
        for b in 0..blocks {
            let start = b * BLOCK;
            let end = (start + BLOCK).min(n);
            stack.clear();
            let mut cur = 0u64;
            let mut best = start;
            for i in start..end {
                while let Some(&top) = stack.last() {
                    if values[top] > values[i] {
                        cur &= !(1u64 << (top - start));
                        stack.pop();
                    } else {
                        break;
                    }
                }
                cur |= 1u64 << (i - start);
                stack.push(i);
                masks[i] = cur;
                if values[i] < values[best] {
                    best = i;
                }
            }
            block_min.push(best as u32);
        }
        let mut table = vec![block_min];
        let mut k = 1;
        while (1usize << k) <= blocks {
            let prev = &table[k - 1];
            let half = 1usize << (k - 1);
            let row: Vec<u32> = (0..=blocks - (1 << k))
                .map(|i| better(&values, prev[i], prev[i + half]))
                .collect();
            table.push(row);
            k += 1;
        }
        RmqIndex {
            values,
            masks,
            table,
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    /// Leftmost index of the minimum over `[i, j]`.
    pub fn query(&self, i: usize, j: usize) -> Result<usize> {
        if i > j || j >= self.values.len() {
            return Err(Error::BadRange(i, j));
        }
        Ok(self.argmin(i, j))
    }

    #[inline]
    pub(crate) fn argmin(&self, i: usize, j: usize) -> usize {
        let (bi, bj) = (i / BLOCK, j / BLOCK);
        if bi == bj {
            return self.in_block(i, j);
        }
        let mut best = self.in_block(i, bi * BLOCK + BLOCK - 1);
        if bi + 1 < bj {
            let (lo, hi) = (bi + 1, bj - 1);
            let k = usize::BITS as usize - 1 - (hi - lo + 1).leading_zeros() as usize;
            let row = &self.table[k];
            let mid = better(&self.values, row[lo], row[hi + 1 - (1 << k)]) as usize;
            if self.values[mid] < self.values[best] {
                best = mid;
            }
        }
        let right = self.in_block(bj * BLOCK, j);
        if self.values[right] < self.values[best] {
            best = right;
        }
        best
    }

    #[inline]
    fn in_block(&self, i: usize, j: usize) -> usize {
        let start = i - i % BLOCK;
        let m = self.masks[j] & (!0u64 << (i - start));
        start + m.trailing_zeros() as usize
    }
}

#[inline]
fn better<T: PartialOrd>(values: &[T], a: u32, b: u32) -> u32 {
    if values[b as usize] < values[a as usize] {
        b
    } else {
        a
    }
}
