from parley.filters import contains_profanity, mask_words


def test_clean_text_passes():
    assert not contains_profanity("i love watching movies with friends")


def test_whole_word_hits():
    assert contains_profanity("that was damn good")
    assert contains_profanity("DAMN")


def test_stem_hits_inside_words():
    assert contains_profanity("what the hellfire")
    assert contains_profanity("bullshit")


def test_stems_do_not_cross_token_boundaries():
    # "pas senger" must not assemble a stem across the space.
    assert not contains_profanity("pas senger")


def test_mask_words_survive():
    masked = mask_words()
    assert "massachusetts" in masked
    for word in ("massachusetts", "passenger", "mitchell", "casserole",
                 "shellfish", "grapevine"):
        assert not contains_profanity(f"i visited {word} yesterday")


def test_bundled_gazetteer_surfaces_are_speakable(gaz):
    flagged = [
        surface
        for record in gaz
        for surface in record.surfaces()
        if contains_profanity(surface)
    ]
    assert flagged == []
