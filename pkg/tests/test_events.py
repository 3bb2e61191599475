from datetime import datetime, timedelta, timezone

import pytest

from cuequest.errors import MalformedLog
from cuequest.events import (
    EventLog,
    SessionEvent,
    format_ts,
    parse_ts,
    read_event_file,
)

TS = datetime(2026, 4, 5, 6, 7, 8, 123000, tzinfo=timezone.utc)


def make_event(kind="challenge_shown", ts=TS, **kwargs):
    defaults = dict(session_id="s1", player_id="p1", points=0)
    defaults.update(kwargs)
    return SessionEvent(ts=ts, kind=kind, **defaults)


class TestTimestamps:
    def test_format_is_utc_millisecond_z(self):
        assert format_ts(TS) == "2026-04-05T06:07:08.123Z"

    def test_roundtrip(self):
        assert parse_ts(format_ts(TS)) == TS

    def test_microseconds_truncate_to_milliseconds(self):
        ts = TS.replace(microsecond=123456)
        assert format_ts(ts) == "2026-04-05T06:07:08.123Z"


class TestEventRecord:
    def test_roundtrip_with_optional_fields(self):
        event = make_event(
            kind="answer_submitted",
            slot=3,
            challenge_kind="recall",
            correct=True,
            points=40,
            command_id="c1",
            payload={"submission": "WALK"},
        )
        restored = SessionEvent.from_dict(event.to_dict())
        assert restored == event

    def test_none_fields_omitted_from_record(self):
        record = make_event().to_dict()
        assert "correct" not in record
        assert "badge" not in record
        assert record["v"] == 1

    def test_malformed_record(self):
        with pytest.raises(MalformedLog):
            SessionEvent.from_dict({"ts": "not-a-time", "session": "s", "player": "p",
                                    "event": "x", "points": 0})


class TestEventLog:
    def test_append_and_read_back(self, tmp_path):
        log = EventLog(tmp_path)
        events = [make_event(ts=TS + timedelta(seconds=i), points=i) for i in range(5)]
        log.append(events)
        assert [e.points for e in log.read_all()] == [0, 1, 2, 3, 4]

    def test_one_file_per_day(self, tmp_path):
        log = EventLog(tmp_path)
        log.append([make_event(ts=TS), make_event(ts=TS + timedelta(days=1))])
        names = sorted(p.name for p in tmp_path.glob("*.ndjson"))
        assert names == ["2026-04-05.ndjson", "2026-04-06.ndjson"]

    def test_torn_final_line_is_dropped(self, tmp_path):
        log = EventLog(tmp_path)
        log.append([make_event()])
        path = next(tmp_path.glob("*.ndjson"))
        with path.open("a", encoding="utf-8") as fh:
            fh.write('{"v": 1, "truncat')
        assert len(read_event_file(path)) == 1

    def test_corrupt_middle_line_raises(self, tmp_path):
        log = EventLog(tmp_path)
        log.append([make_event()])
        path = next(tmp_path.glob("*.ndjson"))
        content = path.read_text()
        path.write_text("garbage\n" + content)
        with pytest.raises(MalformedLog):
            read_event_file(path)

    def test_read_all_follows_day_file_order(self, tmp_path):
        log = EventLog(tmp_path)
        later = make_event(ts=TS + timedelta(days=1), points=2)
        earlier = make_event(ts=TS, points=1)
        log.append([later])
        log.append([earlier])
        # day files sort chronologically regardless of append order
        assert [e.points for e in log.read_all()] == [1, 2]
