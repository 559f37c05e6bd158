import random

import pytest

from aspectmine.kano import (
    BUCKET_ORDER,
    BucketAssignment,
    KanoBucket,
    SurveyVote,
    assign_all,
    assignments_from_json,
    assignments_to_json,
    load_assignments,
    load_votes,
    majority,
    parse_bucket,
)


def vote(subject, category, bucket):
    return SurveyVote(subject_id=subject, category_id=category, bucket=bucket)


class TestParseBucket:
    def test_case_insensitive(self):
        assert parse_bucket("Delighter") is KanoBucket.DELIGHTER
        assert parse_bucket("MUST_HAVE") is KanoBucket.MUST_HAVE
        assert parse_bucket("one-dimensional") is KanoBucket.ONE_DIMENSIONAL

    def test_unknown_raises(self):
        with pytest.raises(ValueError):
            parse_bucket("awesome")


class TestMajority:
    def test_strict_majority(self):
        votes = [vote(f"s{i}", "c", KanoBucket.MUST_HAVE) for i in range(20)]
        votes += [vote(f"d{i}", "c", KanoBucket.DELIGHTER) for i in range(11)]
        a = majority("c", votes)
        assert a.bucket is KanoBucket.MUST_HAVE
        assert not a.tied
        assert a.total_votes == 31

    def test_tie_resolved_by_bucket_order(self):
        votes = [vote(f"s{i}", "c", KanoBucket.DELIGHTER) for i in range(10)]
        votes += [vote(f"m{i}", "c", KanoBucket.MUST_HAVE) for i in range(10)]
        a = majority("c", votes)
        assert a.bucket is KanoBucket.MUST_HAVE
        assert a.tied

    def test_single_vote(self):
        a = majority("c", [vote("s", "c", KanoBucket.REVERSE)])
        assert a.bucket is KanoBucket.REVERSE and not a.tied

    def test_zero_votes_unassigned(self):
        a = majority("c", [])
        assert a.bucket is None and a.total_votes == 0

    def test_permutation_invariance_and_tally_sums(self):
        rng = random.Random(7)
        for _ in range(200):
            n = rng.randint(1, 40)
            votes = [vote(f"s{i}", "c", rng.choice(BUCKET_ORDER)) for i in range(n)]
            base = majority("c", votes)
            assert sum(base.tally.values()) == base.total_votes == n
            shuffled = votes[:]
            rng.shuffle(shuffled)
            assert majority("c", shuffled) == base

    def test_adding_vote_for_winner_preserves_winner(self):
        rng = random.Random(21)
        for _ in range(100):
            votes = [vote(f"s{i}", "c", rng.choice(BUCKET_ORDER)) for i in range(rng.randint(1, 25))]
            before = majority("c", votes)
            votes.append(vote("extra", "c", before.bucket))
            after = majority("c", votes)
            assert after.bucket is before.bucket


class TestLoadVotes:
    def write(self, path, rows):
        path.write_text("subject_id,category_id,bucket\n" + "\n".join(rows) + "\n", encoding="utf-8")

    def test_full_survey_shape(self, tmp_path):
        path = tmp_path / "votes.csv"
        rows = [
            f"s{s},c{c},delighter" for s in range(31) for c in range(24)
        ]
        self.write(path, rows)
        votes, rejects = load_votes(path, known_category_ids=[f"c{c}" for c in range(24)])
        assert len(votes) == 744
        assert rejects == []

    def test_duplicate_rejected(self, tmp_path):
        path = tmp_path / "votes.csv"
        self.write(path, ["s1,c1,delighter", "s1,c1,must_have"])
        votes, rejects = load_votes(path, known_category_ids=["c1"])
        assert len(votes) == 1
        assert votes[0].bucket is KanoBucket.DELIGHTER
        assert rejects[0].reason == "duplicate vote"

    def test_unknown_bucket_rejected(self, tmp_path):
        path = tmp_path / "votes.csv"
        self.write(path, ["s1,c1,awesome"])
        votes, rejects = load_votes(path, known_category_ids=["c1"])
        assert votes == [] and len(rejects) == 1

    def test_unknown_category_rejected(self, tmp_path):
        path = tmp_path / "votes.csv"
        self.write(path, ["s1,ghost,delighter"])
        votes, rejects = load_votes(path, known_category_ids=["c1"])
        assert votes == [] and "unknown category" in rejects[0].reason

    def test_case_insensitive_bucket(self, tmp_path):
        path = tmp_path / "votes.csv"
        self.write(path, ["s1,c1,Delighter"])
        votes, _ = load_votes(path, known_category_ids=["c1"])
        assert votes[0].bucket is KanoBucket.DELIGHTER


class TestAssignments:
    def test_round_trip(self, tmp_path):
        votes = [vote("s1", "c1", KanoBucket.MUST_HAVE), vote("s2", "c1", KanoBucket.MUST_HAVE)]
        assignments = assign_all(votes, ["c1", "c2"])
        path = tmp_path / "assignments.json"
        assignments_to_json(assignments, path)
        assert assignments_from_json(path) == assignments

    def test_bare_schema(self, tmp_path):
        path = tmp_path / "assignments.json"
        path.write_text('[{"category_id": "c1", "bucket": "delighter"}]', encoding="utf-8")
        loaded = load_assignments(path)
        assert loaded[0].bucket is KanoBucket.DELIGHTER

    def test_duplicate_category_rejected(self, tmp_path):
        path = tmp_path / "assignments.json"
        path.write_text(
            '[{"category_id": "c1", "bucket": "delighter"}, {"category_id": "c1", "bucket": "reverse"}]',
            encoding="utf-8",
        )
        with pytest.raises(ValueError):
            load_assignments(path)
