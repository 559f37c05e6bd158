import json
import threading
import urllib.error
import urllib.request

import pytest

from aspectmine.corpus import Sentence, tokenize
from aspectmine.kano import KanoBucket, SurveyVote, assign_all
from aspectmine.miner import AspectCategory
from aspectmine.server import build_survey_config, make_server


CATS = [
    AspectCategory(category_id="video_call", label="video call", members=(("video", "call"),)),
    AspectCategory(category_id="sticker", label="sticker", members=(("sticker",),)),
]


def sentences():
    texts = ["love the video call.", "the video call is great.", "more video call praise.", "nice sticker."]
    return [
        Sentence(review_ref=("app", f"r{i}"), index=0, tokens=tuple(tokenize(t)))
        for i, t in enumerate(texts)
    ]


@pytest.fixture()
def survey(tmp_path):
    config = build_survey_config(CATS, sentences(), survey_id="s1")
    server = make_server(0, config, tmp_path / "votes.jsonl")
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    base = f"http://127.0.0.1:{server.server_address[1]}"
    yield base, tmp_path / "votes.jsonl", config
    server.shutdown()
    server.server_close()


def get(url):
    with urllib.request.urlopen(url, timeout=5) as resp:
        return resp.status, json.loads(resp.read().decode("utf-8"))


def get_raw(url):
    with urllib.request.urlopen(url, timeout=5) as resp:
        return resp.status, resp.read().decode("utf-8", errors="replace")


def post(url, payload):
    req = urllib.request.Request(url, data=json.dumps(payload).encode("utf-8"), method="POST")
    req.add_header("Content-Type", "application/json")
    try:
        with urllib.request.urlopen(req, timeout=5) as resp:
            return resp.status, json.loads(resp.read().decode("utf-8"))
    except urllib.error.HTTPError as err:
        return err.code, json.loads(err.read().decode("utf-8"))


def vote_payload(subject="s1", category="video_call", bucket="delighter"):
    return {"subject_id": subject, "category_id": category, "bucket": bucket}


class TestCategories:
    def test_lists_configured_categories_with_snippets(self, survey):
        base, _, _ = survey
        status, payload = get(f"{base}/api/categories")
        assert status == 200
        assert [c["category_id"] for c in payload] == ["video_call", "sticker"]
        snippets = payload[0]["sample_snippets"]
        assert 0 < len(snippets) <= 3
        assert all("video call" in s for s in snippets)
        assert payload[1]["members"] == ["sticker"]

    def test_404_when_no_survey(self, tmp_path):
        server = make_server(0, None, tmp_path / "votes.jsonl")
        thread = threading.Thread(target=server.serve_forever, daemon=True)
        thread.start()
        try:
            status, _ = post(
                f"http://127.0.0.1:{server.server_address[1]}/api/votes", vote_payload()
            )
            assert status == 404
            with pytest.raises(urllib.error.HTTPError) as err:
                get(f"http://127.0.0.1:{server.server_address[1]}/api/categories")
            assert err.value.code == 404
        finally:
            server.shutdown()
            server.server_close()


class TestVotes:
    def test_first_vote_201_duplicate_409(self, survey):
        base, _, _ = survey
        status, _ = post(f"{base}/api/votes", vote_payload())
        assert status == 201
        status, _ = post(f"{base}/api/votes", vote_payload(bucket="must_have"))
        assert status == 409
        _, tally = get(f"{base}/api/tally")
        video = next(t for t in tally if t["category_id"] == "video_call")
        assert video["total_votes"] == 1
        assert video["tally"]["delighter"] == 1

    def test_invalid_bucket_422(self, survey):
        base, _, _ = survey
        status, _ = post(f"{base}/api/votes", vote_payload(bucket="awesome"))
        assert status == 422

    def test_unknown_category_422(self, survey):
        base, _, _ = survey
        status, _ = post(f"{base}/api/votes", vote_payload(category="ghost"))
        assert status == 422

    def test_closed_survey_403_but_categories_readable(self, tmp_path):
        config = build_survey_config(CATS, sentences(), is_open=False)
        server = make_server(0, config, tmp_path / "votes.jsonl")
        threading.Thread(target=server.serve_forever, daemon=True).start()
        base = f"http://127.0.0.1:{server.server_address[1]}"
        try:
            status, _ = post(f"{base}/api/votes", vote_payload())
            assert status == 403
            status, payload = get(f"{base}/api/categories")
            assert status == 200 and len(payload) == 2
        finally:
            server.shutdown()
            server.server_close()

    def test_concurrent_duplicates_single_201(self, survey):
        base, _, _ = survey
        results = []
        barrier = threading.Barrier(8)

        def submit():
            barrier.wait()
            status, _ = post(f"{base}/api/votes", vote_payload(subject="racer"))
            results.append(status)

        threads = [threading.Thread(target=submit) for _ in range(8)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert results.count(201) == 1
        assert results.count(409) == 7


class TestTally:
    def test_matches_majority_of_vote_log(self, survey):
        base, votes_log, _ = survey
        for i in range(5):
            post(f"{base}/api/votes", vote_payload(subject=f"s{i}", bucket="must_have"))
        for i in range(3):
            post(f"{base}/api/votes", vote_payload(subject=f"d{i}", bucket="delighter"))
        _, tally = get(f"{base}/api/tally")
        video = next(t for t in tally if t["category_id"] == "video_call")
        assert video["assigned_bucket"] == "must_have"
        assert video["total_votes"] == 8

        logged = [json.loads(l) for l in votes_log.read_text().splitlines()]
        votes = [
            SurveyVote(subject_id=r["subject_id"], category_id=r["category_id"], bucket=KanoBucket(r["bucket"]))
            for r in logged
        ]
        expected = assign_all(votes, ["video_call", "sticker"])
        by_id = {a.category_id: a for a in expected}
        for entry in tally:
            ref = by_id[entry["category_id"]]
            assert entry["assigned_bucket"] == (ref.bucket.value if ref.bucket else None)
            assert entry["total_votes"] == ref.total_votes
            assert entry["tied"] == ref.tied

    def test_zero_votes_unassigned(self, survey):
        base, _, _ = survey
        _, tally = get(f"{base}/api/tally")
        assert all(t["assigned_bucket"] is None for t in tally)

    def test_tie_flagged_with_deterministic_winner(self, survey):
        base, _, _ = survey
        post(f"{base}/api/votes", vote_payload(subject="a", bucket="delighter"))
        post(f"{base}/api/votes", vote_payload(subject="b", bucket="must_have"))
        _, tally = get(f"{base}/api/tally")
        video = next(t for t in tally if t["category_id"] == "video_call")
        assert video["tied"] is True
        assert video["assigned_bucket"] == "must_have"


class TestPersistence:
    def test_votes_survive_restart(self, tmp_path):
        config = build_survey_config(CATS, sentences())
        log = tmp_path / "votes.jsonl"
        server = make_server(0, config, log)
        threading.Thread(target=server.serve_forever, daemon=True).start()
        base = f"http://127.0.0.1:{server.server_address[1]}"
        post(f"{base}/api/votes", vote_payload())
        server.shutdown()
        server.server_close()

        reborn = make_server(0, config, log)
        threading.Thread(target=reborn.serve_forever, daemon=True).start()
        base2 = f"http://127.0.0.1:{reborn.server_address[1]}"
        try:
            _, tally = get(f"{base2}/api/tally")
            video = next(t for t in tally if t["category_id"] == "video_call")
            assert video["total_votes"] == 1
            status, _ = post(f"{base2}/api/votes", vote_payload())
            assert status == 409
        finally:
            reborn.shutdown()
            reborn.server_close()


class TestStatic:
    def test_root_serves_html(self, survey):
        base, _, _ = survey
        status, text = get_raw(f"{base}/")
        assert status == 200
        # either the built survey UI bundle or the fallback page
        assert '<div id="app">' in text or "Survey service" in text

    def test_fallback_when_ui_dir_empty(self, tmp_path):
        config = build_survey_config(CATS, [])
        empty = tmp_path / "ui"
        empty.mkdir()
        server = make_server(0, config, tmp_path / "votes.jsonl", ui_dir=empty)
        threading.Thread(target=server.serve_forever, daemon=True).start()
        base = f"http://127.0.0.1:{server.server_address[1]}"
        try:
            status, text = get_raw(f"{base}/")
            assert status == 200 and "Survey service" in text
        finally:
            server.shutdown()
            server.server_close()

    def test_report_dir_served(self, tmp_path):
        config = build_survey_config(CATS, [])
        report_dir = tmp_path / "report"
        report_dir.mkdir()
        (report_dir / "index.html").write_text("<html>report here</html>", encoding="utf-8")
        server = make_server(0, config, tmp_path / "votes.jsonl", report_dir=report_dir)
        threading.Thread(target=server.serve_forever, daemon=True).start()
        base = f"http://127.0.0.1:{server.server_address[1]}"
        try:
            status, text = get_raw(f"{base}/report/")
            assert status == 200 and "report here" in text
        finally:
            server.shutdown()
            server.server_close()

    def test_path_traversal_blocked(self, tmp_path):
        config = build_survey_config(CATS, [])
        ui = tmp_path / "ui"
        ui.mkdir()
        (ui / "index.html").write_text("<html>ui</html>", encoding="utf-8")
        secret = tmp_path / "secret.txt"
        secret.write_text("nope", encoding="utf-8")
        server = make_server(0, config, tmp_path / "votes.jsonl", ui_dir=ui)
        threading.Thread(target=server.serve_forever, daemon=True).start()
        base = f"http://127.0.0.1:{server.server_address[1]}"
        try:
            status, text = get_raw(f"{base}/../secret.txt")
            assert "nope" not in text
        finally:
            server.shutdown()
            server.server_close()
