use std::collections::BTreeSet;

use super::{GroupContext, WreathElement};

/// A conjugacy class; `representative` is its least element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: WreathElement,
    /// Sorted.
    pub elements: Vec<WreathElement>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.elements.len()
    }
}

/// Classes by conjugating every element by the whole group, ordered by
/// representative.
pub(super) fn brute_force(ctx: &GroupContext) -> Vec<ConjugacyClass> {
    let inverses: Vec<WreathElement> = ctx.elements.iter().map(|g| g.inverse()).collect();
    let mut assigned = vec![false; ctx.order()];
    let mut out = Vec::new();
    for (i, x) in ctx.elements.iter().enumerate() {
        if assigned[i] {
            continue;
        }
        let class: BTreeSet<WreathElement> = ctx
            .elements
            .iter()
            .zip(&inverses)
            .map(|(g, gi)| g.mul(x).mul(gi))
            .collect();
        for y in &class {
            assigned[ctx.index[y]] = true;
        }
        let elements: Vec<_> = class.into_iter().collect();
        out.push(ConjugacyClass {
            representative: elements[0].clone(),
            elements,
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use crate::partition::partitions_of;
    use crate::wreath::GroupContext;

    #[test]
    fn class_counts() {
        assert_eq!(
            GroupContext::new(2, 2).unwrap().conjugacy_classes().len(),
            5
        );
        assert_eq!(
            GroupContext::new(3, 2).unwrap().conjugacy_classes().len(),
            9
        );
        assert_eq!(
            GroupContext::new(2, 3).unwrap().conjugacy_classes().len(),
            10
        );
        for m in 1..=5 {
            let ctx = GroupContext::new(m, 1).unwrap();
            assert_eq!(ctx.conjugacy_classes().len(), partitions_of(m).len());
        }
    }

    #[test]
    fn classes_partition_the_group() {
        let ctx = GroupContext::new(3, 2).unwrap();
        let total: usize = ctx.conjugacy_classes().iter().map(|c| c.size()).sum();
        assert_eq!(total, ctx.order());
        for c in ctx.conjugacy_classes() {
            assert_eq!(ctx.order() % c.size(), 0);
            assert_eq!(c.representative, c.elements[0]);
        }
        assert!(ctx.conjugacy_classes()[0].representative.is_identity());
    }
}
