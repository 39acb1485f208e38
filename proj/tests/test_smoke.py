"""Smoke test for the python bindings; run with PYTHONPATH pointing at the
built extension and the python/ package directory."""

import braidrep


def main():
    assert braidrep.qybe_exact(1, 2, 4)
    assert braidrep.qybe_exact(2, 3, 3)

    for name, ok in braidrep.axioms(1, 2, 4):
        assert ok, name
    for name, ok in braidrep.presentation(2, 1, 2, 3):
        assert ok, name
    for name, ok in braidrep.presentation(3, 1, 3, 3):
        assert ok, name

    assert braidrep.abrr_exact(1, 2, 4)
    assert braidrep.pentagon_exact(1, 2, 3)
    assert braidrep.octagon_exact(1, 3, 3)

    for v in braidrep.kz_octagon_profile(2, 2.0, 3):
        assert v < 1e-6, v

    words = braidrep.enumerate_words(2, 4, True)
    assert len(words) == 80
    deltas = braidrep.compare_characters(["t", "s1", "t s1^-1 t s1"], 2, 1, 2, 2.0, 3)
    for word, per_order in deltas:
        for v in per_order:
            assert v < 1e-5, (word, v)

    print("smoke ok")


if __name__ == "__main__":
    main()
