//! Every example under `examples/` runs and produces its advertised result.

mod walk_dp {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/walk_dp.rs"));

    #[test]
    fn runs() {
        assert_eq!(run_example(), Some(vec![0, 1, 2, 0, 1, 3]));
    }
}

mod path_dp {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/path_dp.rs"));

    #[test]
    fn runs() {
        assert_eq!(run_example(), (true, false));
    }
}

mod detour {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/detour.rs"));

    #[test]
    fn runs() {
        assert_eq!(run_example(), vec![None, Some(3), Some(3)]);
    }
}

mod representatives {
    #![allow(dead_code)]
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/representatives.rs"
    ));

    #[test]
    fn runs() {
        assert_eq!(run_example().0, 3);
    }
}

mod any_length {
    #![allow(dead_code)]
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/any_length.rs"
    ));

    #[test]
    fn runs() {
        assert!(run_example()
            .iter()
            .all(|&(_, cap, product)| cap == product));
    }
}

mod shortcuts {
    #![allow(dead_code)]
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/shortcuts.rs"
    ));

    #[test]
    fn runs() {
        assert_eq!(run_example(), 20);
    }
}

mod phs_reduction {
    #![allow(dead_code)]
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/phs_reduction.rs"
    ));

    #[test]
    fn runs() {
        assert!(run_example().is_some());
    }
}

mod sat_reduction {
    #![allow(dead_code)]
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/sat_reduction.rs"
    ));

    #[test]
    fn runs() {
        assert!(run_example());
    }
}

mod instance_io {
    #![allow(dead_code)]
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/instance_io.rs"
    ));

    #[test]
    fn runs() {
        assert!(run_example());
    }
}

mod crosscheck {
    #![allow(dead_code)]
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/crosscheck.rs"
    ));

    #[test]
    fn runs() {
        assert_eq!(run_example(), 0);
    }
}
