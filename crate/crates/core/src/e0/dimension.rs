//! Dimension counts on `E(0)`, used to confirm the families registered as
//! zero "by dimension count".
//!
//! For the class `aS + dF` we have `c1 = 2F`, so `c1 . (aS + dF) = 2a` and
//! `V . (aS + dF) = a`. With `n` absolute insertions and `l` contact points
//! the relative moduli space has real dimension `2(a + g - 1 + n + l)`.

/// Absolute insertion in `E(0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Insertion {
    Point,
    Cycle,
    Fiber,
    Section,
    Unit,
    TauF,
    PsiF,
}

impl Insertion {
    /// Real degree of the constraint.
    pub fn degree(self) -> usize {
        match self {
            Insertion::Point | Insertion::TauF | Insertion::PsiF => 4,
            Insertion::Cycle => 3,
            Insertion::Fiber | Insertion::Section => 2,
            Insertion::Unit => 0,
        }
    }
}

/// Contact constraint: the cycle of `V` the contact point must lie on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Contact {
    Point,
    Cycle,
    Whole,
}

impl Contact {
    /// Real codimension in `V`.
    pub fn degree(self) -> usize {
        match self {
            Contact::Point => 2,
            Contact::Cycle => 1,
            Contact::Whole => 0,
        }
    }
}

/// Real dimension of the relative moduli space of genus `g` maps in class
/// `aS + dF` with `n` marked points and `l` contact points. Negative values
/// are reported as `None`.
pub fn expected_dimension(a: usize, g: usize, n: usize, l: usize) -> Option<usize> {
    (a + g + n + l).checked_sub(1).map(|x| 2 * x)
}

/// Expected dimension minus total constraint degree. A nonzero defect means
/// the invariant vanishes.
pub fn defect(a: usize, g: usize, insertions: &[Insertion], contacts: &[Contact]) -> i64 {
    let dim = expected_dimension(a, g, insertions.len(), contacts.len()).map_or(-1, |x| x as i64);
    let cons: usize = insertions.iter().map(|i| i.degree()).sum::<usize>()
        + contacts.iter().map(|c| c.degree()).sum::<usize>();
    dim - cons as i64
}

/// A pair of connected relative maps in classes `S + d_i F`, one contact point
/// each, with total Euler characteristic `chi`. Returns true when every way of
/// distributing the genus and the insertions leaves at least one component with
/// nonzero defect.
pub fn pair_vanishes(chi: i64, contacts: [Contact; 2], insertions: &[Insertion]) -> bool {
    let genus_total = 2 - chi / 2;
    if genus_total < 0 {
        return true;
    }
    let genus_total = genus_total as usize;
    let n = insertions.len();
    for g1 in 0..=genus_total {
        let g2 = genus_total - g1;
        for mask in 0u32..(1 << n) {
            let (mut left, mut right) = (Vec::new(), Vec::new());
            for (i, ins) in insertions.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    left.push(*ins);
                } else {
                    right.push(*ins);
                }
            }
            if defect(1, g1, &left, &[contacts[0]]) == 0 && defect(1, g2, &right, &[contacts[1]]) == 0 {
                return false;
            }
        }
    }
    true
}
