use crate::implication::ImplicationFamily;

/// `{5}->{6,7}, {6}->{3}, {1,2,3}->{7}, {3}->{4,5}` over `{1..7}`.
pub(crate) fn toy_family() -> ImplicationFamily {
    ImplicationFamily::from_pairs(7, &[(&[5], &[6, 7]), (&[6], &[3]), (&[1, 2, 3], &[7]), (&[3], &[4, 5])])
        .unwrap()
}
