#![no_main]

use libfuzzer_sys::fuzz_target;
use svtab::SetValuedTableau;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(t) = SetValuedTableau::from_json_str(text) {
        let again = SetValuedTableau::from_json_str(&t.to_json_string()).expect("encoder output decodes");
        assert_eq!(again, t);
        let _ = t.is_valid();
        let _ = t.render_text();
    }
});
