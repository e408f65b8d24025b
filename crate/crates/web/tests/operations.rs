use verlinde_web::{dimension_table, enumeration, example, tqft_invariants};

#[test]
fn fibonacci_dimension_table() {
    let fib = example("fib.fusion").unwrap();
    assert_eq!(
        dimension_table(&fib, 3, "").unwrap(),
        "genus 0: 1\ngenus 1: 2\ngenus 2: 5\ngenus 3: 15\n"
    );
    assert_eq!(dimension_table(&fib, 0, "tau, tau, tau").unwrap(), "genus 0: 1\n");
}

#[test]
fn blocks_are_shown_separately() {
    let ring = example("fib_x_z2.fusion").unwrap();
    let table = dimension_table(&ring, 1, "").unwrap();
    assert_eq!(table, "genus 0: 2 = 1 + 1\ngenus 1: 4 = 2 + 2\n");
}

#[test]
fn unknown_label_is_an_error() {
    let fib = example("fib.fusion").unwrap();
    assert!(dimension_table(&fib, 1, "sigma").is_err());
    assert!(dimension_table("rank x", 1, "").unwrap_err().contains("line 1"));
}

#[test]
fn z2_invariants() {
    let z2 = example("z2.algebra").unwrap();
    assert_eq!(
        tqft_invariants(&z2, 3).unwrap(),
        "identities: ok\ngenus 0: 1\ngenus 1: 2\ngenus 2: 4\ngenus 3: 8\n"
    );
}

#[test]
fn enumeration_bounds() {
    assert_eq!(enumeration(2, 1).unwrap().matches("# ring").count(), 2);
    assert!(enumeration(0, 1).is_err());
    assert!(enumeration(9, 1).is_err());
}
