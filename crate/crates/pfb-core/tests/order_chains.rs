//! Frozen ordering chains: the thirteen semistandard tableaux of weight
//! (2,1,1,1) and the reference chains of the two graded lexicographic
//! orders.

use std::cmp::Ordering;

use pfb_core::tableaux::{
    enumerate_ssyt, partition_cmp, partitions_of, tableau_cmp, weight_cmp, weights_up_to,
    Partition, Tableau, Weight,
};

fn tab(rows: &[&[usize]]) -> Tableau {
    Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn thirteen_chain() -> Vec<Tableau> {
    vec![
        tab(&[&[1, 1], &[2], &[3], &[4]]),
        tab(&[&[1, 1], &[2, 4], &[3]]),
        tab(&[&[1, 1, 4], &[2], &[3]]),
        tab(&[&[1, 1], &[2, 3], &[4]]),
        tab(&[&[1, 1, 4], &[2, 3]]),
        tab(&[&[1, 1, 3], &[2], &[4]]),
        tab(&[&[1, 1, 3], &[2, 4]]),
        tab(&[&[1, 1, 3, 4], &[2]]),
        tab(&[&[1, 1, 2], &[3], &[4]]),
        tab(&[&[1, 1, 2], &[3, 4]]),
        tab(&[&[1, 1, 2, 4], &[3]]),
        tab(&[&[1, 1, 2, 3], &[4]]),
        tab(&[&[1, 1, 2, 3, 4]]),
    ]
}

#[test]
fn thirteen_tableaux_sort_into_the_reference_chain() {
    let got = enumerate_ssyt(&Weight::new(vec![2, 1, 1, 1]), None);
    assert_eq!(got, thirteen_chain());
}

#[test]
fn chain_is_strictly_increasing() {
    let chain = thirteen_chain();
    for i in 0..chain.len() {
        for j in 0..chain.len() {
            let expected = i.cmp(&j);
            assert_eq!(
                tableau_cmp(&chain[i], &chain[j]),
                expected,
                "positions {} and {}",
                i,
                j
            );
        }
    }
}

#[test]
fn weight_order_reference_chain() {
    let expected: Vec<Vec<usize>> = vec![
        vec![0, 0, 0],
        vec![0, 0, 1],
        vec![0, 1, 0],
        vec![1, 0, 0],
        vec![0, 0, 2],
        vec![0, 1, 1],
        vec![0, 2, 0],
        vec![1, 0, 1],
        vec![1, 1, 0],
        vec![2, 0, 0],
        vec![0, 0, 3],
        vec![0, 1, 2],
        vec![0, 2, 1],
        vec![0, 3, 0],
        vec![1, 0, 2],
        vec![1, 1, 1],
        vec![1, 2, 0],
        vec![2, 0, 1],
        vec![2, 1, 0],
        vec![3, 0, 0],
    ];
    let got: Vec<Vec<usize>> = weights_up_to(3, 3)
        .iter()
        .map(|w| w.counts().to_vec())
        .collect();
    assert_eq!(got, expected);

    // The enumeration order coincides with the comparison order.
    let ws = weights_up_to(3, 3);
    for pair in ws.windows(2) {
        assert_eq!(weight_cmp(&pair[0], &pair[1]).unwrap(), Ordering::Less);
    }
}

#[test]
fn partition_order_reference_chain() {
    let expected: Vec<Vec<usize>> = vec![
        vec![],
        vec![1],
        vec![1, 1],
        vec![2],
        vec![1, 1, 1],
        vec![2, 1],
        vec![3],
        vec![1, 1, 1, 1],
        vec![2, 1, 1],
        vec![2, 2],
        vec![3, 1],
        vec![4],
    ];
    let mut all: Vec<Partition> = (0..=4)
        .flat_map(|n| partitions_of(n, n.max(1), n.max(1)))
        .collect();
    all.sort_by(partition_cmp);
    let got: Vec<Vec<usize>> = all.iter().map(|p| p.parts().to_vec()).collect();
    assert_eq!(got, expected);
}

#[test]
fn padded_display_matches_the_four_slot_rendering() {
    let p = Partition::new(vec![2, 1]).unwrap();
    assert_eq!(p.padded(4), vec![2, 1, 0, 0]);
    assert_eq!(Partition::empty().padded(4), vec![0, 0, 0, 0]);
}
