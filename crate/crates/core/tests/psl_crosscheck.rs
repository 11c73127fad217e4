mod common;

use common::psl_crosscheck;

#[test]
fn coset_action_and_suborbits() {
    let r = psl_crosscheck();
    assert_eq!(r.degree, 51);
    assert_eq!(r.lengths, [1, 1, 1, 16, 16, 16]);
    assert!(r.long_suborbits_self_paired);
    assert_eq!(r.s_cycle_types.len(), 8);
    for (m, ct) in &r.s_cycle_types {
        assert_eq!(ct, &[17, 17, 17], "m={m}");
    }
    for (m, a, b) in &r.double_cells {
        assert_eq!((a.as_slice(), b.as_slice()), (&[17, 17, 17][..], &[17, 17, 17][..]), "m={m}");
    }
}

/// `H` contains `t^3r` only for `r` mod 5 while `y = theta^-r` runs over all
/// of `F_16^*`; cubing is 3-to-1 there, so every valency is counted three
/// times by the `y != 0` solutions. Neither convention matches exactly.
#[test]
fn valencies_against_solution_counts() {
    let r = psl_crosscheck();
    assert_eq!(r.rows.len(), 8 * 27);
    for row in &r.rows {
        assert_eq!(row.count_y_nonzero, 3 * row.valency as u64, "{row:?}");
        assert_eq!(row.count_free, row.count_y_nonzero + 1, "{row:?}");
    }
    assert!(r.rows.iter().all(|x| x.valency >= 2));
    let exact_nz = r.rows.iter().filter(|x| x.count_y_nonzero == x.valency as u64).count();
    let exact_free = r.rows.iter().filter(|x| x.count_free == x.valency as u64).count();
    assert_eq!((exact_nz, exact_free), (0, 0));
}
