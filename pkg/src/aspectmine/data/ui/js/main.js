import { ApiClient } from "./api.js";
import { BallotState, submitSelection } from "./state.js";
import { TallyPoller } from "./tally.js";
import { BUCKETS, BUCKET_HINTS, BUCKET_LABELS } from "./types.js";
const api = new ApiClient("");
const app = document.getElementById("app");
function el(tag, className = "", text = "") {
    const node = document.createElement(tag);
    if (className)
        node.className = className;
    if (text)
        node.textContent = text;
    return node;
}
function renderLanding(onReady) {
    app.replaceChildren();
    const box = el("div", "landing");
    box.append(el("h1", "", "Aspect survey"));
    box.append(el("p", "", "Pick the Kano bucket that fits each aspect category best. " +
        "Enter a subject id to begin; it is stored only in this browser session."));
    const input = el("input");
    input.placeholder = "subject id (e.g. your initials)";
    const existing = sessionStorage.getItem("subject_id") ?? "";
    input.value = existing;
    const button = el("button", "", "Start");
    button.onclick = () => {
        const id = input.value.trim();
        if (!id) {
            input.focus();
            return;
        }
        sessionStorage.setItem("subject_id", id);
        onReady(id);
    };
    box.append(input, button);
    app.replaceChildren(box);
}
function renderError(message, retry) {
    app.replaceChildren();
    const banner = el("div", "banner error");
    banner.append(el("span", "", message));
    const button = el("button", "", "Retry");
    button.onclick = retry;
    banner.append(button);
    app.replaceChildren(banner);
}
function statusText(card) {
    switch (card.status) {
        case "submitted":
            return "vote recorded";
        case "already_voted":
            return "already voted";
        case "pending":
            return "sending…";
        case "queued":
        case "rejected":
            return card.message;
        default:
            return "";
    }
}
function renderBallot(ballot, container, progress) {
    container.replaceChildren();
    const { done, total } = ballot.progress();
    progress.textContent = ballot.allDone() ? `${done}/${total} — ballot complete` : `${done}/${total}`;
    for (const card of ballot.list()) {
        const cid = card.info.category_id;
        const locked = ballot.isLocked(cid);
        const box = el("div", locked ? "card locked" : "card");
        box.append(el("h3", "", card.info.label));
        box.append(el("div", "members", card.info.members.join(" · ")));
        for (const snippet of card.info.sample_snippets) {
            box.append(el("blockquote", "snippet", `“${snippet}”`));
        }
        const choices = el("div", "choices");
        for (const bucket of BUCKETS) {
            const label = el("label", card.selected === bucket ? "choice selected" : "choice");
            const radio = el("input");
            radio.type = "radio";
            radio.name = `bucket-${cid}`;
            radio.checked = card.selected === bucket;
            radio.disabled = locked;
            radio.onchange = () => {
                ballot.select(cid, bucket);
                renderBallot(ballot, container, progress);
            };
            label.append(radio, el("strong", "", BUCKET_LABELS[bucket]), el("small", "", BUCKET_HINTS[bucket]));
            choices.append(label);
        }
        box.append(choices);
        const submit = el("button", "", card.status === "queued" ? "Retry" : "Submit");
        submit.disabled = !ballot.canSubmit(cid);
        submit.onclick = () => {
            submit.disabled = true; // idempotent guard against double clicks
            void submitSelection(api, ballot, cid).then(() => renderBallot(ballot, container, progress));
            renderBallot(ballot, container, progress);
        };
        const status = el("span", `status ${card.status}`, statusText(card));
        const row = el("div", "actions");
        row.append(submit, status);
        box.append(row);
        container.append(box);
    }
}
function renderTallyRows(rows, labels, container) {
    container.replaceChildren();
    for (const row of rows) {
        const box = el("div", "tally-row");
        const head = el("div", "tally-head");
        head.append(el("strong", "", labels.get(row.categoryId) ?? row.categoryId));
        if (row.awaitingVotes) {
            head.append(el("span", "awaiting", "awaiting votes"));
        }
        else {
            const winner = row.winner;
            head.append(el("span", "winner", `→ ${BUCKET_LABELS[winner]}`));
            if (row.tied) {
                head.append(el("span", "tie-badge", "tie"));
            }
            head.append(el("span", "total", `${row.totalVotes} votes`));
        }
        box.append(head);
        const bar = el("div", "tally-bar");
        for (const seg of row.segments) {
            if (seg.count === 0)
                continue;
            const part = el("div", `seg ${seg.bucket}${seg.bucket === row.winner ? " win" : ""}`);
            part.style.width = `${(seg.share * 100).toFixed(1)}%`;
            part.title = `${BUCKET_LABELS[seg.bucket]}: ${seg.count}`;
            part.textContent = String(seg.count);
            bar.append(part);
        }
        box.append(bar);
        container.append(box);
    }
}
function renderMain(subjectId, categories) {
    app.replaceChildren();
    const ballot = new BallotState(subjectId, categories);
    const labels = new Map(categories.map((c) => [c.category_id, c.label]));
    const header = el("div", "header");
    header.append(el("h1", "", "Aspect survey"));
    header.append(el("span", "subject", `subject: ${subjectId}`));
    const progress = el("span", "progress");
    header.append(progress);
    const tabs = el("div", "tabs");
    const ballotTab = el("button", "tab active", "Ballot");
    const tallyTab = el("button", "tab", "Live tally");
    tabs.append(ballotTab, tallyTab);
    const ballotPane = el("div", "pane");
    const tallyPane = el("div", "pane hidden");
    const tallyStatus = el("div", "banner hidden");
    tallyPane.append(tallyStatus);
    const tallyRows = el("div");
    tallyPane.append(tallyRows);
    const poller = new TallyPoller(api, (rows) => {
        tallyStatus.classList.add("hidden");
        renderTallyRows(rows, labels, tallyRows);
    }, (message) => {
        tallyStatus.classList.remove("hidden");
        tallyStatus.textContent = `tally unavailable: ${message}`;
    });
    ballotTab.onclick = () => {
        ballotTab.classList.add("active");
        tallyTab.classList.remove("active");
        ballotPane.classList.remove("hidden");
        tallyPane.classList.add("hidden");
        poller.stop();
    };
    tallyTab.onclick = () => {
        tallyTab.classList.add("active");
        ballotTab.classList.remove("active");
        tallyPane.classList.remove("hidden");
        ballotPane.classList.add("hidden");
        poller.start();
    };
    app.append(header, tabs, ballotPane, tallyPane);
    renderBallot(ballot, ballotPane, progress);
}
function boot() {
    renderLanding((subjectId) => {
        api
            .getCategories()
            .then((categories) => renderMain(subjectId, categories))
            .catch((err) => renderError(err instanceof Error && err.message.includes("404")
            ? "No survey is configured on this server yet."
            : `Cannot reach the survey API: ${err}`, boot));
    });
}
boot();
