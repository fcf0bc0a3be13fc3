#pragma once

// Xlib window frontend: software raster blitted with XPutImage.

#include <X11/Xlib.h>
#include <X11/Xutil.h>
#include <X11/keysym.h>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <vector>

#include "xkg/loop.hpp"
#include "xkg/raster.hpp"

namespace xkg::tools {

class X11Frontend final : public Frontend {
 public:
  static bool available() { return std::getenv("DISPLAY") != nullptr; }

  X11Frontend(int width, int height, const char* title) : width_(width), height_(height) {
    display_ = XOpenDisplay(nullptr);
    if (!display_) throw std::runtime_error("cannot open X display");
    const int screen = DefaultScreen(display_);
    window_ = XCreateSimpleWindow(display_, RootWindow(display_, screen), 0, 0, static_cast<unsigned>(width),
                                  static_cast<unsigned>(height), 0, BlackPixel(display_, screen),
                                  BlackPixel(display_, screen));
    XStoreName(display_, window_, title);
    XSelectInput(display_, window_, KeyPressMask | KeyReleaseMask | ExposureMask | StructureNotifyMask);
    wm_delete_ = XInternAtom(display_, "WM_DELETE_WINDOW", False);
    XSetWMProtocols(display_, window_, &wm_delete_, 1);
    XMapWindow(display_, window_);
    gc_ = XCreateGC(display_, window_, 0, nullptr);
    pixels_.resize(static_cast<std::size_t>(width) * static_cast<std::size_t>(height));
    image_ = XCreateImage(display_, DefaultVisual(display_, screen), static_cast<unsigned>(DefaultDepth(display_, screen)),
                          ZPixmap, 0, reinterpret_cast<char*>(pixels_.data()), static_cast<unsigned>(width),
                          static_cast<unsigned>(height), 32, 0);
  }

  ~X11Frontend() override {
    if (image_) {
      image_->data = nullptr;  // owned by pixels_
      XDestroyImage(image_);
    }
    XFreeGC(display_, gc_);
    XDestroyWindow(display_, window_);
    XCloseDisplay(display_);
  }

  X11Frontend(const X11Frontend&) = delete;
  X11Frontend& operator=(const X11Frontend&) = delete;

  std::vector<KeyEvent> poll_events() override {
    std::vector<KeyEvent> out;
    while (XPending(display_)) {
      XEvent ev;
      XNextEvent(display_, &ev);
      if (ev.type == ClientMessage && static_cast<Atom>(ev.xclient.data.l[0]) == wm_delete_) {
        closed_ = true;
      } else if (ev.type == KeyPress || ev.type == KeyRelease) {
        const KeySym sym = XLookupKeysym(&ev.xkey, 0);
        out.push_back({translate(sym), ev.type == KeyPress});
      }
    }
    return out;
  }

  void present(const DrawList& frame, std::span<const RolloutRecord>) override {
    surface_.clear(colors::black);
    raster_draw(surface_, frame);
    for (std::size_t i = 0; i < pixels_.size(); ++i) {
      const Color c = surface_.pixels()[i];
      pixels_[i] = (std::uint32_t{c.r} << 16) | (std::uint32_t{c.g} << 8) | std::uint32_t{c.b};
    }
    XPutImage(display_, window_, gc_, image_, 0, 0, 0, 0, static_cast<unsigned>(width_), static_cast<unsigned>(height_));
    XFlush(display_);
  }

  [[nodiscard]] bool closed() const override { return closed_; }

 private:
  static Key translate(KeySym sym) {
    switch (sym) {
      case XK_Left: return Key::left;
      case XK_Right: return Key::right;
      case XK_Up: return Key::up;
      case XK_Down: return Key::down;
      case XK_space: return Key::space;
      case XK_Escape:
      case XK_q: return Key::escape;
      default: return Key::other;
    }
  }

  int width_;
  int height_;
  Display* display_ = nullptr;
  Window window_{};
  GC gc_{};
  Atom wm_delete_{};
  XImage* image_ = nullptr;
  std::vector<std::uint32_t> pixels_;
  Surface surface_{width_, height_};
  bool closed_ = false;
};

}  // namespace xkg::tools
