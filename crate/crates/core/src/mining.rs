//! Instances from 0/1 data.
//!
//! Each row of a [`BinaryMatrix`] is one equally likely sample; the empirical
//! probability of a column set is the fraction of rows with a 1 in every one
//! of its columns. The rows themselves are a realization, so every empirical
//! instance is feasible.

use num_traits::{One, Zero};

use crate::instance::{AtomDistribution, BooleInstance, SetFamily, SubsetMask, MAX_GROUND_SET};
use crate::numerics::Rat;
use crate::{Error, Result};

/// Rows of 0/1 cells over `cols` columns. Column `j` is element `j` of the
/// ground set, so each row is stored as a [`SubsetMask`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryMatrix {
    cols: usize,
    rows: Vec<SubsetMask>,
}

impl BinaryMatrix {
    pub fn new(cols: usize, rows: Vec<Vec<bool>>) -> Result<Self> {
        if cols > MAX_GROUND_SET {
            return Err(Error::GroundSetTooLarge {
                n: cols,
                cap: MAX_GROUND_SET,
            });
        }
        if rows.is_empty() {
            return Err(Error::EmptyMatrix);
        }
        let mut masks = Vec::with_capacity(rows.len());
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::RaggedRow {
                    line: i + 1,
                    expected: cols,
                    found: row.len(),
                });
            }
            let bits = row
                .iter()
                .enumerate()
                .filter(|(_, &c)| c)
                .fold(0u32, |acc, (j, _)| acc | 1 << j);
            masks.push(SubsetMask::from_bits(bits));
        }
        Ok(BinaryMatrix { cols, rows: masks })
    }

    pub fn from_masks(cols: usize, rows: Vec<SubsetMask>) -> Result<Self> {
        let dense = rows
            .iter()
            .map(|r| (1..=cols).map(|j| r.contains(j)).collect())
            .collect();
        let m = BinaryMatrix::new(cols, dense)?;
        if let Some(r) = rows
            .iter()
            .find(|r| !r.is_subset_of(SubsetMask::full(cols)))
        {
            let element = r.elements().into_iter().find(|&e| e > cols).unwrap_or(0);
            return Err(Error::ElementOutOfRange { element, n: cols });
        }
        Ok(m)
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// The column support of each row.
    pub fn rows(&self) -> &[SubsetMask] {
        &self.rows
    }

    /// Number of rows with a 1 in every column of `set`.
    pub fn support_count(&self, set: SubsetMask) -> usize {
        self.rows.iter().filter(|r| set.is_subset_of(**r)).count()
    }

    pub fn frequency(&self, set: SubsetMask) -> Rat {
        Rat::new(
            (self.support_count(set) as i64).into(),
            (self.rows.len() as i64).into(),
        )
    }
}

/// Parses comma- or whitespace-separated 0/1 rows. Blank lines are skipped.
/// With `header`, the first nonblank line is dropped unread.
pub fn load_matrix(text: &str, header: bool) -> Result<BinaryMatrix> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    if header {
        lines.next();
    }
    let mut cols = None;
    let mut rows = Vec::new();
    for (i, line) in lines {
        let line_no = i + 1;
        let row = line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| match t {
                "0" => Ok(false),
                "1" => Ok(true),
                other => Err(Error::NonBinaryEntry {
                    line: line_no,
                    token: other.to_string(),
                }),
            })
            .collect::<Result<Vec<bool>>>()?;
        let expected = *cols.get_or_insert(row.len());
        if row.len() != expected {
            return Err(Error::RaggedRow {
                line: line_no,
                expected,
                found: row.len(),
            });
        }
        rows.push(row);
    }
    BinaryMatrix::new(cols.unwrap_or(0), rows)
}

/// `b_S` = fraction of rows containing `S`, for every `S` in `family`.
pub fn empirical_b(data: &BinaryMatrix, family: &SetFamily) -> Result<BooleInstance> {
    if family.n() != data.cols() {
        return Err(Error::FamilyColumnMismatch {
            family: family.n(),
            columns: data.cols(),
        });
    }
    let probs = family
        .members()
        .iter()
        .map(|&s| data.frequency(s))
        .collect();
    BooleInstance::new(family.clone(), probs)
}

/// The realization behind [`empirical_b`]: each row's support carries weight
/// `1 / rows`.
pub fn row_distribution(data: &BinaryMatrix) -> AtomDistribution {
    let share = Rat::new(One::one(), (data.num_rows() as i64).into());
    AtomDistribution::new(data.cols(), data.rows().iter().map(|&r| (r, share.clone())))
        .expect("row shares sum to one")
}

/// Every nonempty column set of size at most `max_size` whose frequency is at
/// least `eps`, level by level and in lexicographic order within a level.
///
/// Candidates of size `k + 1` are unions of two frequent `k`-sets that share
/// their first `k − 1` elements, kept only when all their `k`-subsets are
/// frequent. The result may be empty.
pub fn apriori(data: &BinaryMatrix, eps: &Rat, max_size: usize) -> Result<Vec<SubsetMask>> {
    if *eps <= Rat::zero() || *eps > Rat::one() {
        return Err(Error::ThresholdOutOfRange(eps.to_string()));
    }
    let frequent = |s: SubsetMask| data.frequency(s) >= *eps;
    let mut out = Vec::new();
    let mut level: Vec<Vec<usize>> = (1..=data.cols())
        .map(|j| vec![j])
        .filter(|s| max_size >= 1 && frequent(to_mask(s)))
        .collect();
    let mut size = 1;
    while !level.is_empty() {
        out.extend(level.iter().map(|s| to_mask(s)));
        if size == max_size {
            break;
        }
        let known: std::collections::HashSet<SubsetMask> =
            level.iter().map(|s| to_mask(s)).collect();
        let mut next = Vec::new();
        for (i, a) in level.iter().enumerate() {
            for b in &level[i + 1..] {
                if a[..size - 1] != b[..size - 1] {
                    break;
                }
                let mut cand = a.clone();
                cand.push(b[size - 1]);
                let closed = (0..cand.len()).all(|drop| {
                    let sub = to_mask(
                        &cand
                            .iter()
                            .enumerate()
                            .filter(|(j, _)| *j != drop)
                            .map(|(_, &e)| e)
                            .collect::<Vec<_>>(),
                    );
                    known.contains(&sub)
                });
                if closed && frequent(to_mask(&cand)) {
                    next.push(cand);
                }
            }
        }
        level = next;
        size += 1;
    }
    Ok(out)
}

fn to_mask(elements: &[usize]) -> SubsetMask {
    elements
        .iter()
        .fold(SubsetMask::EMPTY, |m, &e| m.union(SubsetMask::singleton(e)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hailperin::is_feasible;
    use crate::numerics::rat;

    fn family(n: usize, sets: &[&[usize]]) -> SetFamily {
        SetFamily::new(
            n,
            sets.iter()
                .map(|s| SubsetMask::from_elements(n, s).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn loading() {
        let m = load_matrix("1,0\n0,1", false).unwrap();
        assert_eq!((m.num_rows(), m.cols()), (2, 2));
        let m = load_matrix("1,1,1", false).unwrap();
        assert_eq!((m.num_rows(), m.cols()), (1, 3));
        assert_eq!(m.rows()[0], SubsetMask::full(3));
        assert_eq!(
            load_matrix("1,2", false),
            Err(Error::NonBinaryEntry {
                line: 1,
                token: "2".to_string()
            })
        );
        assert_eq!(
            load_matrix("1 0\n1", false),
            Err(Error::RaggedRow {
                line: 2,
                expected: 2,
                found: 1
            })
        );
        assert_eq!(load_matrix("\n\n", false), Err(Error::EmptyMatrix));
        let m = load_matrix("a b\n1 0\n\n0 1\n", true).unwrap();
        assert_eq!(m.num_rows(), 2);
    }

    #[test]
    fn empirical_values() {
        let id = load_matrix("1,0\n0,1", false).unwrap();
        let f = family(2, &[&[1], &[2], &[1, 2]]);
        assert_eq!(
            empirical_b(&id, &f).unwrap().probs(),
            &[rat(1, 2), rat(1, 2), rat(0, 1)]
        );

        let ones = load_matrix("1 1\n1 1\n1 1", false).unwrap();
        assert!(empirical_b(&ones, &f)
            .unwrap()
            .probs()
            .iter()
            .all(|p| *p == rat(1, 1)));

        let d = load_matrix("1,1\n1,0\n0,0", false).unwrap();
        let inst = empirical_b(&d, &f).unwrap();
        assert_eq!(inst.probs(), &[rat(2, 3), rat(1, 3), rat(1, 3)]);
        assert!(row_distribution(&d).realizes(&inst));
        assert!(is_feasible(&inst).is_feasible());

        assert!(matches!(
            empirical_b(&d, &family(3, &[&[1]])),
            Err(Error::FamilyColumnMismatch { .. })
        ));
    }

    #[test]
    fn apriori_cases() {
        let id = load_matrix("1,0\n0,1", false).unwrap();
        assert_eq!(
            apriori(&id, &rat(1, 2), 2).unwrap(),
            vec![SubsetMask::singleton(1), SubsetMask::singleton(2)]
        );

        let ones = load_matrix("1 1 1\n1 1 1", false).unwrap();
        let all = apriori(&ones, &rat(1, 1), 2).unwrap();
        assert_eq!(all.len(), 6);
        assert!(all.iter().all(|s| s.len() <= 2));

        let d = load_matrix("1,1\n1,0\n0,0", false).unwrap();
        assert!(apriori(&d, &rat(3, 4), 2).unwrap().is_empty());
        assert!(apriori(&d, &rat(0, 1), 2).is_err());
        assert!(apriori(&d, &rat(1, 2), 0).unwrap().is_empty());
    }

    #[test]
    fn apriori_prunes_by_subsets() {
        // {1,2}, {1,3} frequent; {2,3} not, so {1,2,3} is never counted.
        let d = load_matrix("1 1 0\n1 0 1\n1 1 1", false).unwrap();
        let got = apriori(&d, &rat(2, 3), 3).unwrap();
        assert_eq!(
            got,
            vec![
                SubsetMask::singleton(1),
                SubsetMask::singleton(2),
                SubsetMask::singleton(3),
                to_mask(&[1, 2]),
                to_mask(&[1, 3]),
            ]
        );
    }
}
