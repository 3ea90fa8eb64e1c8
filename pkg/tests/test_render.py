import pytest

from dispersim.engine import run
from dispersim.envgen import rect
from dispersim.errors import StepOutOfRange
from dispersim.render import ascii_frame, svg_frames
from dispersim.strategies import make_strategy


def test_first_frame_shows_fresh_spawn():
    r = rect(1, 5, (0, 0))
    trace, _ = run(r, make_strategy("fcdfs", r, 0))
    frame = ascii_frame(trace, 1)
    assert frame.splitlines()[-1] == "^"  # robot 1 just emerged at the door


def test_two_cell_corridor_second_step():
    r = rect(2, 1, (0, 0))
    trace, _ = run(r, make_strategy("fcdfs", r, 0))
    assert ascii_frame(trace, 2) == "S>"


def test_final_frame_of_covered_run_has_no_floor():
    r = rect(4, 3, (1, 1))
    trace, m = run(r, make_strategy("fcdfs", r, 0))
    frame = ascii_frame(trace, m.makespan)
    assert "." not in frame and "S" not in frame
    # the robot that emerged on the final step never settles
    assert frame.count("o") == len(r.cells) - 1
    assert frame.count("^") == 1


def test_frame_dimensions_and_glyph_count():
    r = rect(5, 4, (0, 0))
    trace, _ = run(r, make_strategy("fcdfs", r, 0))
    for t in (1, 5, 9):
        frame = ascii_frame(trace, t)
        lines = frame.splitlines()
        assert len(lines) == 4 and all(len(l) == 5 for l in lines)
        live = sum(frame.count(ch) for ch in "^>v<o")
        _, spawn, rows = trace.steps[t - 1]
        expected = len(rows) + (1 if spawn is not None else 0)
        assert live == expected


def test_frame_out_of_range():
    r = rect(2, 1, (0, 0))
    trace, _ = run(r, make_strategy("fcdfs", r, 0))
    with pytest.raises(StepOutOfRange):
        ascii_frame(trace, 0)
    with pytest.raises(StepOutOfRange):
        ascii_frame(trace, len(trace.steps) + 1)


def test_svg_frames_count_and_determinism(tmp_path):
    r = rect(1, 5, (0, 0))
    trace, m = run(r, make_strategy("fcdfs", r, 0))
    out1 = tmp_path / "a"
    files = svg_frames(trace, 1, out1)
    assert len(files) == 9  # one per step of the makespan-9 run
    assert files[0].endswith("frame_000001.svg")
    out2 = tmp_path / "b"
    files2 = svg_frames(trace, 1, out2)
    for f1, f2 in zip(files, files2):
        assert open(f1, "rb").read().replace(b"/a/", b"/b/") == open(
            f2, "rb"
        ).read().replace(b"/a/", b"/b/")


def test_svg_single_final_frame():
    import tempfile

    r = rect(3, 3, (0, 0))
    trace, m = run(r, make_strategy("fcdfs", r, 0))
    with tempfile.TemporaryDirectory() as d:
        files = svg_frames(trace, m.makespan, d)
        assert len(files) == 1
        body = open(files[0]).read()
        assert body.startswith("<?xml")
        assert body.count("polygon") == 9  # nine settled diamonds
