from sandhisearch.translit import iast_to_deva


class TestHealthAndRules:
    def test_health(self, client):
        resp = client.get("/health")
        assert resp.status_code == 200
        assert resp.json()["status"] == "ok"

    def test_rules(self, client):
        rules = client.get("/rules").json()
        assert len(rules) == 66
        seven = next(r for r in rules if r["id"] == 7)
        assert seven["sutra"] == "6.1.101"
        assert seven["name"] == "savarṇadīrgha"
        assert seven["optional"] is False


class TestJoin:
    def test_simple(self, client):
        resp = client.post("/join", json={"first": "deva", "second": "ālaya"})
        assert resp.status_code == 200
        assert [a["text"] for a in resp.json()["alternatives"]] == ["devālaya"]

    def test_alternatives_carry_rules(self, client):
        alts = client.post("/join", json={"first": "rāmaḥ", "second": "gacchati"}).json()["alternatives"]
        assert alts[0]["text"] == "rāmo gacchati"
        assert alts[0]["rules"] == [1, 2, 4, 13]

    def test_devanagari(self, client):
        resp = client.post("/join", json={
            "first": iast_to_deva("deva"), "second": iast_to_deva("ālaya"),
            "script": "devanagari"})
        alts = resp.json()["alternatives"]
        assert alts[0]["text"] == iast_to_deva("devālaya")
        assert alts[0]["iast"] == "devālaya"

    def test_empty_word_is_400(self, client):
        resp = client.post("/join", json={"first": "", "second": "x"})
        assert resp.status_code == 400
        assert resp.json()["detail"]["error"] == "EmptyWord"

    def test_unknown_grapheme_position(self, client):
        resp = client.post("/join", json={"first": "deva", "second": "qx"})
        assert resp.status_code == 400
        detail = resp.json()["detail"]
        assert detail["error"] == "UnknownGrapheme"
        assert detail["position"] == 0


class TestForms:
    def test_forms(self, client):
        body = client.post("/forms", json={"word": "tat"}).json()
        surfaces = [f["surface"] for f in body["forms"]]
        assert surfaces == sorted(surfaces)
        assert {"tat", "tad", "tac", "tan"} <= set(surfaces)


class TestSearch:
    def test_inline_text(self, client):
        body = client.post("/search", json={
            "word": "rāmaḥ", "text": "purā rāmo gacchati sma\n"}).json()
        assert any(m["surface"] == "rāmo" for m in body["matches"])

    def test_corpus_registry(self, client):
        info = client.post("/corpora", json={
            "text": "asamṛddhir bhavati\n", "source": "t.txt"}).json()
        cid = info["corpus_id"]
        assert info["chars"] > 0
        listed = client.get("/corpora").json()
        assert any(c["corpus_id"] == cid for c in listed)
        body = client.post("/search", json={"word": "asamṛddhiḥ", "corpus_id": cid}).json()
        assert any(m["surface"] == "asamṛddhir" for m in body["matches"])

    def test_unknown_corpus(self, client):
        resp = client.post("/search", json={"word": "tat", "corpus_id": "nope"})
        assert resp.status_code == 404

    def test_missing_corpus(self, client):
        resp = client.post("/search", json={"word": "tat"})
        assert resp.status_code == 400

    def test_devanagari_script(self, client):
        body = client.post("/search", json={
            "word": iast_to_deva("rāmaḥ"),
            "text": iast_to_deva("rāmo gacchati"),
            "script": "devanagari"}).json()
        assert any(m["surface"] == "rāmo" for m in body["matches"])


class TestTransliterate:
    def test_to_iast(self, client):
        body = client.post("/transliterate", json={
            "text": iast_to_deva("rāma"), "to": "iast"}).json()
        assert body["text"] == "rāma"

    def test_to_devanagari(self, client):
        body = client.post("/transliterate", json={
            "text": "rāma", "to": "devanagari"}).json()
        assert body["text"] == iast_to_deva("rāma")

    def test_bad_input(self, client):
        resp = client.post("/transliterate", json={"text": "ॐ", "to": "iast"})
        assert resp.status_code == 400
        assert resp.json()["detail"]["error"] == "UnsupportedCodePoint"
