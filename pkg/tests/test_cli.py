import json

import pytest

from pinnsort import BalancedType, Reversal, balanced_sort
from pinnsort.cli import main
from pinnsort.errors import FormatError
from pinnsort.sorter import Phase
from pinnsort.textio import (
    describe,
    format_trace,
    parse_permutation,
    parse_reversal,
    parse_set,
    parse_trace,
    trace_from_json,
    trace_to_json,
)

from conftest import EXAMPLE1, WORKED_END, WORKED_REVERSALS, WORKED_START, perm


def write(tmp_path, name, text):
    f = tmp_path / name
    f.write_text(text)
    return str(f)


def ints(values):
    return " ".join(map(str, values)) + "\n"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# -- text formats -------------------------------------------------------------


def test_parse_permutation_forms():
    assert parse_permutation("2 1\n3  # comment\n").interior == (2, 1, 3)
    assert parse_permutation("4 2 1 3 5", with_sentinels=True).interior == (2, 1, 3)
    with pytest.raises(FormatError):
        parse_permutation("1 two 3")


def test_parse_set():
    assert parse_set("7,10") == [7, 10]
    assert parse_set("{3, 5}") == [3, 5]
    assert parse_set("") == []
    with pytest.raises(FormatError):
        parse_set("3;5")


def test_parse_reversal_lines():
    assert parse_reversal("R 3 5") == (Reversal(3, 5), None)
    line = parse_reversal("R 3 5 A2s Step1")
    assert line.reversal.tag is BalancedType.A2s and line.phase is Phase.STEP1
    for bad in ("R 3", "X 3 5", "R 3 5 Z9", "R a b", "R 3 5 C2 Step9"):
        with pytest.raises(FormatError):
            parse_reversal(bad)


def test_trace_text_and_json_round_trip():
    tr = balanced_sort(perm(WORKED_START))
    text = format_trace(tr)
    assert text.splitlines()[0] == "n=19 S=3,5,8,11,13,15,18"
    assert text == format_trace(balanced_sort(perm(WORKED_START)))
    parsed = parse_trace(text)
    assert parsed.n == 19 and parsed.S == [3, 5, 8, 11, 13, 15, 18]
    assert [(t.reversal, t.phase) for t in parsed.steps] == [(s.reversal, s.phase) for s in tr.steps]
    record = json.loads(trace_to_json(tr))
    assert record["end"] == list(WORKED_END)
    assert trace_from_json(trace_to_json(tr)).steps == parsed.steps


def test_parse_trace_rejects_late_header():
    with pytest.raises(FormatError):
        parse_trace("R 1 1\nn=3 S=\n")


def test_describe_is_key_value():
    lines = describe(perm(EXAMPLE1)).splitlines()
    assert lines[:3] == ["n=10", "S=7,10", "p=2"]
    assert "run=D(7,1) kind=descending members=4,3,2" in lines


# -- commands -------------------------------------------------------------------


def test_canonical_example2(capsys):
    code, out, _ = run(capsys, "canonical", "-n", "10", "-S", "7,10")
    assert code == 0 and out == "1 7 2 10 3 4 5 6 8 9\n"


def test_canonical_with_sentinels(capsys):
    _, out, _ = run(capsys, "canonical", "-n", "3", "-S", "", "--with-sentinels")
    assert out == "4 1 2 3 5\n"


@pytest.mark.parametrize("S, n", [("2", "5"), ("3,5,7", "6")])
def test_canonical_inadmissible(capsys, S, n):
    code, _, err = run(capsys, "canonical", "-n", n, "-S", S)
    assert code == 1 and "pinnsort:" in err


def test_classify_example2(capsys, tmp_path):
    f = write(tmp_path, "id.txt", "1 7 2 10 3 4 5 6 8 9\n")
    code, out, _ = run(capsys, "classify", f, "1", "10")
    assert code == 0 and out == "NOT-BALANCED\n"
    _, out, _ = run(capsys, "classify", f, "3", "9")
    assert out == "B3\n"  # v3 then a member of A(3, 12)


def test_classify_literal_flag(capsys, tmp_path):
    f = write(tmp_path, "p.txt", "3 4 5 1 2\n")
    assert run(capsys, "classify", f, "4", "2")[1] == "AA\n"
    assert run(capsys, "classify", f, "4", "2", "--literal")[1] == "NOT-BALANCED\n"


def test_sort_worked_example(capsys, tmp_path):
    f = write(tmp_path, "w.txt", ints(WORKED_START))
    t = str(tmp_path / "w.trace")
    code, out, err = run(capsys, "sort", f, "--trace", t, "--backend", "fast")
    assert code == 0 and out == ints(WORKED_END)
    steps = parse_trace((tmp_path / "w.trace").read_text()).steps
    assert len(steps) <= 35
    assert err.startswith(f"steps={len(steps)} bound=35")


def test_sort_then_verify_round_trip(capsys, tmp_path):
    f = write(tmp_path, "p.txt", "5 9 2 7 1 8 3 6 4\n")
    t = str(tmp_path / "p.trace")
    j = str(tmp_path / "p.json")
    _, target, _ = run(capsys, "sort", f, "--trace", t, "--json", j)
    g = write(tmp_path, "target.txt", target)
    for trace_file in (t, j):
        code, out, _ = run(capsys, "verify", f, trace_file, "--target", g)
        assert code == 0 and out.splitlines()[-1].startswith("ACCEPT")


def test_sort_output_is_byte_stable(capsys, tmp_path):
    f = write(tmp_path, "p.txt", ints(WORKED_START))
    outs = []
    for k in range(2):
        t = tmp_path / f"t{k}"
        run(capsys, "sort", f, "--trace", str(t))
        outs.append(t.read_bytes())
    assert outs[0] == outs[1]


def test_verify_reference_rows(capsys, tmp_path):
    f = write(tmp_path, "w.txt", ints(WORKED_START))
    g = write(tmp_path, "end.txt", ints(WORKED_END))
    t = write(tmp_path, "pub.trace", "".join(f"R {a} {b}\n" for a, b in WORKED_REVERSALS))
    code, out, _ = run(capsys, "verify", f, t, "--target", g)
    assert code == 0
    assert out.splitlines()[-1] == "ACCEPT 15 steps"


def test_verify_rejects_unbalanced(capsys, tmp_path):
    f = write(tmp_path, "id.txt", "1 7 2 10 3 4 5 6 8 9\n")
    t = write(tmp_path, "bad.trace", "n=10 S=7,10\nR 1 10\n")
    code, out, _ = run(capsys, "verify", f, t)
    assert code == 1 and "REJECT at step 1" in out


def test_verify_header_mismatch(capsys, tmp_path):
    f = write(tmp_path, "id.txt", "1 7 2 10 3 4 5 6 8 9\n")
    t = write(tmp_path, "t.trace", "n=10 S=7\n")
    assert run(capsys, "verify", f, t)[0] == 1


def test_transform(capsys, tmp_path):
    f = write(tmp_path, "a.txt", "2 3 1 5 4 7 6\n")
    g = write(tmp_path, "b.txt", "1 3 2 5 4 7 6\n")
    code, out, err = run(capsys, "transform", f, g)
    assert code == 0 and out == "1 3 2 5 4 7 6\n"
    h = write(tmp_path, "c.txt", "1 2 3 4 5 6 7\n")
    assert run(capsys, "transform", f, h)[0] == 1


def test_analyze(capsys, tmp_path):
    f = write(tmp_path, "e1.txt", "11 8 6 7 4 3 2 1 5 10 9 12\n")
    code, out, _ = run(capsys, "analyze", f, "--with-sentinels")
    assert code == 0 and out == describe(perm(EXAMPLE1))


@pytest.mark.parametrize("content", ["1 2 2\n", "1 x\n"])
def test_bad_permutation_file_is_a_parse_error(capsys, tmp_path, content):
    f = write(tmp_path, "bad.txt", content)
    assert run(capsys, "analyze", f)[0] == 2


def test_usage_errors(capsys, tmp_path):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["canonical", "-S", "1"])
    assert exc.value.code == 2
    f = write(tmp_path, "p.txt", "1 2\n")
    assert run(capsys, "sort", f, "--backend", "splay")[0] == 2
    assert run(capsys, "analyze", str(tmp_path / "missing.txt"))[0] == 2


def test_classify_bad_endpoints_is_domain_error(capsys, tmp_path):
    f = write(tmp_path, "p.txt", "2 1 3\n")
    assert run(capsys, "classify", f, "3", "2")[0] == 1
    assert run(capsys, "classify", f, "4", "2")[0] == 1


def test_bench(capsys):
    code, out, _ = run(capsys, "bench", "-n", "50", "--reps", "2", "--seed", "1")
    lines = out.splitlines()
    assert code == 0 and lines[0].split()[0] == "backend"
    assert [ln.split()[0] for ln in lines[1:]] == ["naive", "fast"]
    assert lines[1].split()[5] == lines[2].split()[5]
