use std::fmt;

use super::DesignError;

/// Fixed-width bit row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct BitRow(Vec<u64>);

impl BitRow {
    pub(crate) fn new(len: usize) -> Self {
        BitRow(vec![0; len.div_ceil(64)])
    }

    pub(crate) fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    pub(crate) fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    pub(crate) fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub(crate) fn and_count(&self, other: &BitRow) -> usize {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }
}

/// Points `0..v` and a list of distinct nonempty blocks.
///
/// Blocks are stored sorted internally and the block list is kept in
/// lexicographic order, so two structures on the same labels are equal
/// exactly when their block sets are.
#[derive(Clone, PartialEq, Eq)]
pub struct IncidenceStructure {
    v: usize,
    blocks: Vec<Vec<usize>>,
    /// `by_block[b]` has bit `p` set when point `p` lies on block `b`.
    by_block: Vec<BitRow>,
    /// `by_point[p]` has bit `b` set when point `p` lies on block `b`.
    by_point: Vec<BitRow>,
}

impl IncidenceStructure {
    pub fn new(v: usize, blocks: Vec<Vec<usize>>) -> Result<Self, DesignError> {
        let mut sorted = Vec::with_capacity(blocks.len());
        for mut block in blocks {
            if block.is_empty() {
                return Err(DesignError::EmptyBlock);
            }
            block.sort_unstable();
            if let Some(w) = block.windows(2).find(|w| w[0] == w[1]) {
                return Err(DesignError::RepeatedPoint { point: w[0] + 1 });
            }
            if let Some(&p) = block.last().filter(|&&p| p >= v) {
                return Err(DesignError::PointOutOfRange { point: p + 1, v });
            }
            sorted.push(block);
        }
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(DesignError::RepeatedBlock {
                block: labels(&w[0]),
            });
        }

        let b = sorted.len();
        let mut by_block = vec![BitRow::new(v); b];
        let mut by_point = vec![BitRow::new(b); v];
        for (i, block) in sorted.iter().enumerate() {
            for &p in block {
                by_block[i].set(p);
                by_point[p].set(i);
            }
        }
        Ok(Self {
            v,
            blocks: sorted,
            by_block,
            by_point,
        })
    }

    /// Parses the text format: `v N`, then one block per line as
    /// comma-separated 1-based labels. Blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self, DesignError> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| DesignError::Malformed("empty design file".into()))?;
        let v = header
            .strip_prefix('v')
            .map(str::trim)
            .and_then(|n| n.parse::<usize>().ok())
            .ok_or_else(|| DesignError::Malformed(format!("expected `v N`, found `{header}`")))?;
        let mut blocks = Vec::new();
        for line in lines {
            let mut block = Vec::new();
            for tok in line.split(',') {
                let tok = tok.trim();
                let label: usize = tok
                    .parse()
                    .map_err(|_| DesignError::Malformed(format!("bad point label `{tok}` in `{line}`")))?;
                if label == 0 || label > v {
                    return Err(DesignError::PointOutOfRange { point: label, v });
                }
                block.push(label - 1);
            }
            blocks.push(block);
        }
        Self::new(v, blocks)
    }

    /// Canonical text form, blocks in lexicographic order.
    pub fn to_text(&self) -> String {
        let mut out = format!("v {}\n", self.v);
        for b in &self.blocks {
            let line: Vec<String> = b.iter().map(|p| (p + 1).to_string()).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block(&self, index: usize) -> &[usize] {
        &self.blocks[index]
    }

    pub fn is_incident(&self, point: usize, block: usize) -> bool {
        self.by_block[block].get(point)
    }

    /// Index of a sorted block, if present.
    pub fn block_index(&self, block: &[usize]) -> Option<usize> {
        self.blocks.binary_search_by(|b| b.as_slice().cmp(block)).ok()
    }

    pub fn blocks_through(&self, point: usize) -> Vec<usize> {
        (0..self.blocks.len()).filter(|&b| self.by_point[point].get(b)).collect()
    }

    pub fn replication(&self, point: usize) -> usize {
        self.by_point[point].count()
    }

    pub fn num_flags(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub(crate) fn point_row(&self, point: usize) -> &BitRow {
        &self.by_point[point]
    }

    pub(crate) fn block_row(&self, block: usize) -> &BitRow {
        &self.by_block[block]
    }
}

impl fmt::Debug for IncidenceStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IncidenceStructure")
            .field("v", &self.v)
            .field("blocks", &self.blocks.len())
            .finish()
    }
}

pub(crate) fn labels(block: &[usize]) -> Vec<usize> {
    block.iter().map(|p| p + 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blocks_are_canonical() {
        let d = IncidenceStructure::new(4, vec![vec![3, 0], vec![1, 0]]).unwrap();
        assert_eq!(d.blocks(), &[vec![0, 1], vec![0, 3]]);
        assert_eq!(d.block_index(&[0, 3]), Some(1));
        assert_eq!(d.blocks_through(0), vec![0, 1]);
        assert!(d.is_incident(3, 1));
    }

    #[test]
    fn rejects_bad_blocks() {
        assert_eq!(IncidenceStructure::new(3, vec![vec![]]), Err(DesignError::EmptyBlock));
        assert!(matches!(
            IncidenceStructure::new(3, vec![vec![0, 3]]),
            Err(DesignError::PointOutOfRange { point: 4, v: 3 })
        ));
        assert!(matches!(
            IncidenceStructure::new(3, vec![vec![0, 1], vec![1, 0]]),
            Err(DesignError::RepeatedBlock { .. })
        ));
        assert!(matches!(
            IncidenceStructure::new(3, vec![vec![1, 1]]),
            Err(DesignError::RepeatedPoint { point: 2 })
        ));
    }

    #[test]
    fn text_round_trip() {
        let text = "v 7\n# comment\n2,4,1\n\n3, 5 ,2\n";
        let d = IncidenceStructure::parse(text).unwrap();
        assert_eq!(d.to_text(), "v 7\n1,2,4\n2,3,5\n");
        assert_eq!(IncidenceStructure::parse(&d.to_text()).unwrap(), d);
        assert!(IncidenceStructure::parse("v 3\n1,x\n").is_err());
        assert!(IncidenceStructure::parse("w 3\n").is_err());
        assert!(IncidenceStructure::parse("v 3\n0,1\n").is_err());
    }
}
