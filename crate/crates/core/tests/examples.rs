macro_rules! example_test {
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

example_test!(static_casimir, "static_casimir.rs");
example_test!(green_function, "green_function.rs");
example_test!(point_splitting, "point_splitting.rs");
example_test!(charged_ring, "charged_ring.rs");
example_test!(landscape_minimum, "landscape_minimum.rs");
example_test!(thermodynamics, "thermodynamics.rs");
example_test!(nanotube_estimate, "nanotube_estimate.rs");
