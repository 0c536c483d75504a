#include <termios.h>
#include <unistd.h>

#include <csignal>
#include <fstream>
#include <iostream>

#include "apc/cli/console.hpp"
#include "apc/lang/lexer.hpp"

namespace apc::cli {

namespace {

constexpr std::size_t kHistoryLimit = 1000;

std::atomic<bool>* g_interrupt = nullptr;

extern "C" void on_sigint(int) {
    if (g_interrupt) g_interrupt->store(true);
}

struct ReadResult {
    enum Kind { Line, Cancel, Eof } kind;
    std::string text;
};

class LineEditor {
public:
    LineEditor(const Session& s, const ConsoleConfig& cfg) : session_(s), cfg_(cfg) { load_history(); }

    ReadResult read(const std::string& prompt) {
        termios saved{};
        if (tcgetattr(STDIN_FILENO, &saved) != 0) return {ReadResult::Eof, {}};
        termios raw = saved;
        raw.c_lflag &= ~tcflag_t(ICANON | ECHO | ISIG | IEXTEN);
        raw.c_iflag &= ~tcflag_t(IXON | ICRNL);
        raw.c_cc[VMIN] = 1;
        raw.c_cc[VTIME] = 0;
        tcsetattr(STDIN_FILENO, TCSAFLUSH, &raw);
        ReadResult r = edit(prompt);
        tcsetattr(STDIN_FILENO, TCSAFLUSH, &saved);
        write_out("\r\n");
        if (r.kind == ReadResult::Line && !r.text.empty()) remember(r.text);
        return r;
    }

private:
    void write_out(std::string_view s) {
        while (!s.empty()) {
            ssize_t n = ::write(STDOUT_FILENO, s.data(), s.size());
            if (n <= 0) return;
            s.remove_prefix(std::size_t(n));
        }
    }

    int key() {
        unsigned char c;
        return ::read(STDIN_FILENO, &c, 1) == 1 ? c : -1;
    }

    void redraw() {
        std::string out = "\r" + prompt_ + (cfg_.color ? highlight(line_, cursor_) : line_) + "\x1b[K\r";
        std::size_t col = prompt_.size() + cursor_;
        if (col) out += "\x1b[" + std::to_string(col) + "C";
        write_out(out);
    }

    void complete() {
        Completion c = complete_at(session_, line_, cursor_);
        line_.replace(c.start, cursor_ - c.start, c.replacement);
        cursor_ = c.start + c.replacement.size();
        if (c.choices.size() > 1) {
            std::string list = "\r\n";
            for (const std::string& n : c.choices) list += n + "  ";
            write_out(list + "\r\n");
        }
    }

    void recall(std::size_t index) {
        if (hist_pos_ == history_.size()) draft_ = line_;
        hist_pos_ = index;
        line_ = hist_pos_ == history_.size() ? draft_ : history_[hist_pos_];
        cursor_ = line_.size();
    }

    void escape_sequence() {
        int a = key();
        if (a != '[' && a != 'O') return;
        int b = key();
        switch (b) {
        case 'A': if (hist_pos_ > 0) recall(hist_pos_ - 1); break;
        case 'B': if (hist_pos_ < history_.size()) recall(hist_pos_ + 1); break;
        case 'C': if (cursor_ < line_.size()) ++cursor_; break;
        case 'D': if (cursor_ > 0) --cursor_; break;
        case 'H': cursor_ = 0; break;
        case 'F': cursor_ = line_.size(); break;
        case '3':
            if (key() == '~' && cursor_ < line_.size()) line_.erase(cursor_, 1);
            break;
        default: break;
        }
    }

    ReadResult edit(const std::string& prompt) {
        prompt_ = prompt;
        line_.clear();
        draft_.clear();
        cursor_ = 0;
        hist_pos_ = history_.size();
        redraw();
        for (;;) {
            int c = key();
            switch (c) {
            case -1: return {ReadResult::Eof, {}};
            case '\r':
            case '\n':
                cursor_ = line_.size();
                redraw();
                return {ReadResult::Line, line_};
            case 3:
                write_out("^C");
                return {ReadResult::Cancel, {}};
            case 4:
                if (line_.empty()) return {ReadResult::Eof, {}};
                if (cursor_ < line_.size()) line_.erase(cursor_, 1);
                break;
            case 127:
            case 8:
                if (cursor_ > 0) line_.erase(--cursor_, 1);
                break;
            case 1: cursor_ = 0; break;
            case 5: cursor_ = line_.size(); break;
            case 11: line_.erase(cursor_); break;
            case 21:
                line_.erase(0, cursor_);
                cursor_ = 0;
                break;
            case 12: write_out("\x1b[H\x1b[2J"); break;
            case 9: complete(); break;
            case 27: escape_sequence(); break;
            default:
                if (c >= 32) line_.insert(cursor_++, 1, char(c));
            }
            redraw();
        }
    }

    void load_history() {
        if (!cfg_.history_file) return;
        std::ifstream in(*cfg_.history_file);
        for (std::string l; std::getline(in, l);) {
            if (!l.empty()) history_.push_back(l);
        }
        if (history_.size() > kHistoryLimit) history_.erase(history_.begin(), history_.end() - kHistoryLimit);
    }

    void remember(const std::string& entry) {
        if (!history_.empty() && history_.back() == entry) return;
        history_.push_back(entry);
        if (cfg_.history_file) {
            std::ofstream out(*cfg_.history_file, std::ios::app);
            out << entry << '\n';
        }
    }

    const Session& session_;
    const ConsoleConfig& cfg_;
    std::vector<std::string> history_;
    std::size_t hist_pos_ = 0;
    std::string prompt_, line_, draft_;
    std::size_t cursor_ = 0;
};

void show(const OutputItem& item, bool color) {
    switch (item.tag) {
    case OutputItem::Tag::Text: std::cout << item.text << '\n' << std::flush; break;
    case OutputItem::Tag::Error:
        std::cerr << (color ? "\x1b[31m" : "") << item.text << (color ? "\x1b[0m" : "") << '\n';
        break;
    case OutputItem::Tag::ChartRef:
    case OutputItem::Tag::ReportRef:
        std::cerr << (color ? "\x1b[2m" : "") << "created " << item.text << " (export " << item.text
                  << " \"file\" to save)" << (color ? "\x1b[0m" : "") << '\n';
        break;
    }
}

}  // namespace

ExitStatus run_repl(Session& session, const ConsoleConfig& config) {
    g_interrupt = &session.interrupt_flag();
    struct sigaction sa{};
    sa.sa_handler = on_sigint;
    sigemptyset(&sa.sa_mask);
    sigaction(SIGINT, &sa, nullptr);

    const bool tty = isatty(STDIN_FILENO) && isatty(STDOUT_FILENO);
    const bool color = config.color && tty;
    ConsoleConfig cfg = config;
    cfg.color = color;
    LineEditor editor(session, cfg);
    std::string buffer;
    while (!session.exit_requested()) {
        const std::string& prompt = buffer.empty() ? cfg.prompt : cfg.continuation_prompt;
        ReadResult r;
        if (tty) {
            r = editor.read(prompt);
        } else {
            std::string l;
            r = std::getline(std::cin, l) ? ReadResult{ReadResult::Line, l} : ReadResult{ReadResult::Eof, {}};
        }
        if (r.kind == ReadResult::Eof) break;
        if (r.kind == ReadResult::Cancel) {
            buffer.clear();
            continue;
        }
        buffer += r.text;
        if (lang::needs_more_input(buffer)) {
            buffer += '\n';
            continue;
        }
        session.execute(buffer, [&](const OutputItem& item) { show(item, color); });
        buffer.clear();
    }
    g_interrupt = nullptr;
    return kExitOk;
}

}  // namespace apc::cli
