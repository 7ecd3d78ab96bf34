import os

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from apilens.effects import IO
from apilens.persistence import (
    InsertTodo,
    MarkDone,
    OpenError,
    PureTodoStore,
    SelectAllTodos,
    StoreClosed,
    StoreError,
    Table,
    TodoItem,
    TodoStore,
    UnknownId,
    close_store,
    open_store,
)

from oracles import ReferenceTodos


@pytest.fixture
def store():
    s = open_store()
    yield s
    s.close()


def rows(store):
    return [(r.id, r.text, r.done) for r in store.execute_query(SelectAllTodos())]


def test_empty_store_has_empty_table(store):
    assert store.execute_query(SelectAllTodos()) == Table(TodoItem, ())


def test_insert_then_mark(store):
    store.execute_cmd(InsertTodo("buy milk"))
    assert rows(store) == [(1, "buy milk", False)]
    store.execute_cmd(MarkDone(1))
    assert rows(store) == [(1, "buy milk", True)]


def test_two_inserts_keep_order(store):
    store.execute_cmd(InsertTodo("a"))
    store.execute_cmd(InsertTodo("b"))
    assert rows(store) == [(1, "a", False), (2, "b", False)]


def test_unknown_id(store):
    with pytest.raises(UnknownId):
        store.execute_cmd(MarkDone(99))


def test_run_cmd_is_deferred(store):
    action = store.run_cmd(InsertTodo("later"))
    assert isinstance(action, IO)
    assert rows(store) == []
    action.run()
    assert rows(store) == [(1, "later", False)]
    assert store.run_query(SelectAllTodos()).run().rows[0].text == "later"


def test_query_declares_schema():
    assert SelectAllTodos.schema is TodoItem


def test_memory_mode_leaves_no_file(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    s = open_store()
    s.execute_cmd(InsertTodo("x"))
    close_store(s)
    assert os.listdir(tmp_path) == []


def test_file_mode_persists(tmp_path):
    path = str(tmp_path / "todo.db")
    with open_store(path) as s:
        s.execute_cmd(InsertTodo("keep me"))
        s.execute_cmd(MarkDone(1))
    with open_store(path) as s:
        assert rows(s) == [(1, "keep me", True)]
        s.execute_cmd(InsertTodo("second"))
        assert rows(s)[-1] == (2, "second", False)


def test_double_close_is_fine_but_use_after_close_is_not():
    s = open_store()
    s.close()
    s.close()
    assert s.closed
    with pytest.raises(StoreClosed):
        s.execute_query(SelectAllTodos())
    with pytest.raises(StoreError):
        s.run_cmd(InsertTodo("x")).run()


def test_unwritable_path(tmp_path):
    with pytest.raises(OpenError):
        open_store(str(tmp_path / "missing" / "todo.db"))


def test_ids_are_not_reused(store):
    for t in "abc":
        store.execute_cmd(InsertTodo(t))
    assert [r[0] for r in rows(store)] == [1, 2, 3]


ops = st.lists(
    st.one_of(
        st.tuples(st.just("insert"), st.text(max_size=8)),
        st.tuples(st.just("mark"), st.integers(min_value=0, max_value=6)),
        st.tuples(st.just("select"), st.none()),
    ),
    max_size=20,
)


@settings(max_examples=150, deadline=None)
@given(ops)
def test_matches_reference_model(program):
    ref = ReferenceTodos()
    pure = PureTodoStore()
    with TodoStore() as real:
        for op, arg in program:
            if op == "insert":
                ref.insert(arg)
                real.run_cmd(InsertTodo(arg)).run()
                pure.execute_cmd(InsertTodo(arg))
            elif op == "mark":
                expected = ref.mark(arg)
                for s in (real, pure):
                    if expected:
                        s.execute_cmd(MarkDone(arg))
                    else:
                        with pytest.raises(UnknownId):
                            s.execute_cmd(MarkDone(arg))
            else:
                first = real.run_query(SelectAllTodos()).run()
                second = real.run_query(SelectAllTodos()).run()
                assert first == second
                assert [(r.id, r.text, r.done) for r in first] == ref.select()
                assert pure.execute_query(SelectAllTodos()) == first
        ids = [r[0] for r in ref.select()]
        assert ids == sorted(set(ids))
        assert [(r.id, r.text, r.done) for r in real.execute_query(SelectAllTodos())] == ref.select()
