"""Built-in codes, random code generation, and the code document format."""

import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidsynth.codes import (
    CodeFormatError,
    kitaev_chain,
    parse_code,
    random_circuit,
    random_code,
    serialize_code,
    shortest_code,
)
from braidsynth.majorana import MajoranaString


def test_kitaev_chain_structure():
    code = kitaev_chain(4)
    assert code.n_modes == 8
    assert code.name == "kitaev-chain-4"
    assert [g.bits.indices() for g in code.generators] == [(1, 2), (3, 4), (5, 6)]
    assert all(g.phase_r == 1 for g in code.generators)
    code.validate()
    assert code.n_logical == 1


def test_kitaev_chain_needs_two_sites():
    with pytest.raises(ValueError):
        kitaev_chain(1)
    kitaev_chain(2).validate()


def test_shortest_code_rows():
    code = shortest_code()
    assert code.n_modes == 12 and code.name == "shortest"
    assert [g.bits.indices() for g in code.generators] == [
        (0, 1, 2, 3),
        (2, 3, 4, 5),
        (6, 7, 8, 9),
        (8, 9, 10, 11),
        (1, 3, 5, 7, 9, 11),
    ]
    assert [g.phase_r for g in code.generators] == [0, 0, 0, 0, 1]
    code.validate()
    assert code.n_logical == 1


def test_random_circuit_shapes():
    c = random_circuit(6, 20, random.Random(1))
    assert len(c) == 20
    assert all(g.kind in ("braid2", "braid4") for g in c.gates)
    # a two-mode register cannot host quartic gates
    c2 = random_circuit(2, 10, random.Random(1))
    assert all(g.kind == "braid2" for g in c2.gates)
    with pytest.raises(ValueError):
        random_circuit(1, 5, random.Random(0))


@given(st.integers(min_value=0, max_value=500))
def test_random_code_is_always_valid(seed):
    rng = random.Random(seed)
    n = rng.choice([2, 4, 6, 8, 10, 12])
    r = rng.randint(0, n // 2)
    code = random_code(n, r, seed=seed)
    code.validate()
    assert code.n_stabilizers == r
    assert code.name == f"random-{n}-{r}-{seed}"


def test_random_code_is_deterministic():
    a = random_code(8, 3, seed=42)
    b = random_code(8, 3, seed=42)
    assert a.generators == b.generators
    c = random_code(8, 3, seed=43)
    assert a.generators != c.generators


def test_random_code_rejects_bad_shapes():
    with pytest.raises(ValueError):
        random_code(7, 2, seed=0)
    with pytest.raises(ValueError):
        random_code(8, 5, seed=0)


@given(st.integers(min_value=0, max_value=200))
def test_document_round_trip(seed):
    rng = random.Random(seed)
    n = rng.choice([4, 6, 8])
    code = random_code(n, rng.randint(0, n // 2), seed=seed)
    assert parse_code(serialize_code(code)) == code


def test_serialize_omits_missing_name():
    code = random_code(4, 1, seed=0)
    doc = json.loads(serialize_code(code))
    assert doc["name"] == code.name
    unnamed = parse_code(
        '{"format_version": 1, "n_modes": 4, "generators": []}'
    )
    assert "name" not in json.loads(serialize_code(unnamed))


def reject(text, fragment):
    with pytest.raises(CodeFormatError, match=fragment):
        parse_code(text)


def test_parse_rejects_malformed_documents():
    reject("not json", "not valid JSON")
    reject("[1, 2]", "top level")
    reject('{"format_version": 1, "n_modes": 4}', "missing")
    reject(
        '{"format_version": 1, "n_modes": 4, "generators": [], "extra": 0}',
        "unknown keys",
    )
    reject('{"format_version": 2, "n_modes": 4, "generators": []}', "format_version")
    reject('{"format_version": 1, "n_modes": "4", "generators": []}', "integer")
    reject('{"format_version": 1, "n_modes": true, "generators": []}', "integer")
    reject('{"format_version": 1, "n_modes": 5, "generators": []}', "even")
    reject('{"format_version": 1, "n_modes": 4, "generators": {}}', "list")
    reject(
        '{"format_version": 1, "n_modes": 4, "generators": [], "name": 7}', "string"
    )


def test_parse_rejects_malformed_generators():
    head = '{"format_version": 1, "n_modes": 4, "generators": ['
    reject(head + "[0, 1]]}", "must be an object")
    reject(head + '{"modes": [0, 1]}]}', "missing")
    reject(head + '{"modes": [0, 1], "phase_r": 1, "x": 0}]}', "unknown keys")
    reject(head + '{"modes": [0, "1"], "phase_r": 1}]}', "integers")
    reject(head + '{"modes": [0, true], "phase_r": 1}]}', "integers")
    reject(head + '{"modes": [0, 4], "phase_r": 1}]}', "range")
    reject(head + '{"modes": [1, 0], "phase_r": 1}]}', "ascending")
    reject(head + '{"modes": [0, 0], "phase_r": 1}]}', "ascending")
    reject(head + '{"modes": [0, 1], "phase_r": 4}]}', "0..3")
    reject(head + '{"modes": [0, 1], "phase_r": true}]}', "0..3")


def test_parse_accepts_a_plain_document():
    code = parse_code(
        json.dumps(
            {
                "format_version": 1,
                "name": "pair",
                "n_modes": 4,
                "generators": [{"modes": [0, 1], "phase_r": 1}],
            }
        )
    )
    assert code.name == "pair"
    assert code.generators == (MajoranaString.from_modes(4, (0, 1), 1),)
