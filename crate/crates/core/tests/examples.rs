//! Runs every example in `examples/`.

macro_rules! example {
    ($module:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $module() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(check_cube, "check_cube.rs");
example!(off_roundtrip, "off_roundtrip.rs");
example!(standard_form, "standard_form.rs");
example!(hull_oracle, "hull_oracle.rs");
example!(dent_witness, "dent_witness.rs");
example!(corner_report, "corner_report.rs");
example!(local_predicates, "local_predicates.rs");
example!(frustum_scaling, "frustum_scaling.rs");
