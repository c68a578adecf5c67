"""Smoke test for the pytextsteg extension module.

Build and run from crates/py:

    maturin develop --release && python python/smoke_test.py

or, without maturin:

    cargo build --release -p textsteg-py --features extension-module
    cp ../../target/release/libpytextsteg.so python/pytextsteg.so
    python python/smoke_test.py
"""

import pytextsteg as ts

MESSAGE = b"Failure is never final !"
COVER = (
    "Rain moved across the valley before noon, and the farmers gathered their tools "
    "under the long roof of the barn. Nobody spoke much while the storm passed. "
) * 40


def main() -> None:
    cipher, key = ts.encipher(MESSAGE)
    assert len(cipher) == len(key) == len(MESSAGE)

    dictionary = ts.Dictionary.bundled()
    assert dictionary.audit("missing-letter") == []
    for method in ("missing-letter", "wordlist", "paragraph"):
        if method == "paragraph":
            result = ts.hide(method, cipher, cover=COVER, seed=7)
        else:
            result = ts.hide(method, cipher, dictionary=dictionary, seed=7)
        recovered = ts.seek(method, result.stego_text, result.stego_key)
        assert ts.decipher(recovered, key) == MESSAGE, method
        print(f"{method}: capacity {result.capacity_percent():.2f}%")

    scores, average = ts.similarity_report("kitchen\n", "k?tchen\n")
    assert len(scores) == 1 and 0.9 < average < 1.0
    assert abs(ts.jaro_winkler("MARTHA", "MARHTA") - 0.9611) < 1e-4
    try:
        ts.capacity_percent(1, 0)
    except ts.TextStegError as err:
        assert err.args[1] == 7
    else:
        raise AssertionError("zero cover accepted")
    print("smoke test passed")


if __name__ == "__main__":
    main()
