import json
import os
import subprocess
import sys

import pytest

LW = [sys.executable, "-m", "liewords.cli"]


def run(*args, env_extra=None):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        LW + list(args), capture_output=True, text=True, env=env, timeout=300
    )


def test_lambda_text():
    r = run("lambda", "aab")
    assert r.returncode == 0
    assert r.stdout == "-1*aba + 1*baa\n"


def test_lambda_methods_agree():
    outs = set()
    for method in ("rec", "oracle", "factors"):
        r = run("lambda", "aabab", "--method", method)
        assert r.returncode == 0
        outs.add(r.stdout)
    assert len(outs) == 1
    r = run("lambda", "abba", "--method", "pascal")  # a^0 b ... b a^1 shape
    assert r.returncode == 0


def test_lambda_json():
    r = run("lambda", "aab", "--format", "json")
    assert r.returncode == 0
    payload = json.loads(r.stdout)
    assert payload == {
        "terms": [{"coeff": "-1", "word": "aba"}, {"coeff": "1", "word": "baa"}]
    }


def test_ell_and_bracket():
    r = run("ell", "abb")
    assert r.returncode == 0
    assert r.stdout == "1*abb - 2*bab + 1*bba\n"
    r = run("bracket", "aabb")
    assert r.returncode == 0
    assert r.stdout.startswith("[a,[[a,b],b]] = ")
    r = run("bracket", "ba")
    assert r.returncode == 2


def test_lyndon():
    r = run("lyndon", "3")
    assert r.returncode == 0
    assert r.stdout == "aab\nabb\n"
    r = run("lyndon", "2", "--alphabet", "abc")
    assert r.stdout == "ab\nac\nbc\n"
    assert run("lyndon", "0").returncode == 2


def test_shuffle_and_residual():
    r = run("shuffle", "ab", "ab")
    assert r.returncode == 0
    assert r.stdout == "4*aabb + 2*abab\n"
    r = run("shuffle", "2*a - b", "1")
    assert r.stdout == "2*a - 1*b\n"
    r = run("residual", "abab", "ab")
    assert r.stdout == "1*ab\n"
    r = run("residual", "abab", "ab", "--side", "left")
    assert r.stdout == "1*ab\n"
    assert run("shuffle", "a+", "b").returncode == 2


def test_scalar_queries():
    assert run("gamma", "baabaa").stdout == "3\n"
    assert run("support", "abba").stdout == "false\n"
    assert run("support", "abba", "--method", "closed").stdout == "false\n"
    assert run("support", "aba").stdout == "true\n"
    r = run("ed", "abaa")
    assert r.stdout == "d=2 e=3\n"
    assert json.loads(run("ed", "abaa", "--format", "json").stdout) == {
        "d": 2, "e": 3,
    }
    assert run("ed", "abba").returncode == 2  # zero image


def test_classify_and_proportional():
    assert run("classify", "aab", "baa").stdout == "twin\n"
    assert run("classify", "aabb", "bbaa").stdout == "anti-twin\n"
    assert run("classify", "aab", "aba").stdout.startswith("neither (witness ")
    assert run("proportional", "abaabaa", "abaaaba").stdout == "4 -3\n"
    assert run("proportional", "aab", "abb").stdout == "not proportional\n"


def test_tabloid():
    r = run("tabloid", "abba")
    assert r.stdout == "({1,4},{2,3})\n"
    payload = json.loads(run("tabloid", "abba", "--format", "json").stdout)
    assert payload == {"tabloid": [[1, 4], [2, 3]]}
    assert run("tabloid", "abc").returncode == 2  # letter outside alphabet


def test_verify_pass_and_fail_exit_codes():
    r = run("verify", "adjoint", "--max-len", "4")
    assert r.returncode == 0
    assert "result: pass" in r.stdout
    assert "ms" in r.stderr  # timing goes to stderr, not the report
    # the classification suite has a genuine counterexample family at
    # length 8, so it must exit 1 and list the failures
    r = run("verify", "theorem2", "--max-len", "8")
    assert r.returncode == 1
    assert "FAIL" in r.stdout


def test_verify_usage_errors():
    assert run("verify", "nope").returncode == 2
    assert run("verify", "support", "--max-len", "99").returncode == 2
    r = run("verify", "adjoint", "--max-len", "1", "--unsafe-no-cap")
    assert r.returncode == 0


def test_verify_deterministic_across_runs_and_jobs():
    outs = set()
    for jobs in ("1", "2", "3"):
        for _ in range(2):
            r = run("verify", "support", "--max-len", "8", "--jobs", jobs)
            assert r.returncode == 0
            outs.add(r.stdout)
    assert len(outs) == 1


def test_jobs_env_default():
    r = run("verify", "adjoint", "--max-len", "4", env_extra={"LW_JOBS": "2"})
    assert r.returncode == 0
    r2 = run("verify", "adjoint", "--max-len", "4", env_extra={"LW_JOBS": "bogus"})
    assert r2.returncode == 0
    assert r.stdout == r2.stdout


def test_json_report_schema():
    r = run("verify", "adjoint", "--max-len", "4", "--format", "json")
    payload = json.loads(r.stdout)
    assert set(payload) == {"suite", "params", "cases", "failures", "millis"}
    assert payload["suite"] == "adjoint"
    assert payload["failures"] == []
    assert payload["cases"] > 0


def test_bad_word_rejected():
    assert run("lambda", "aX").returncode == 2
    assert run("gamma", "a1b").returncode == 2
